#pragma once

#include <span>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

// Cartesian product of two or more factors. Product vertices are coordinate
// tuples encoded mixed-radix with the last factor least significant, so for
// factors of orders (2, 3) the tuple (1, 2) encodes to 1*3 + 2 = 5.
class ProductGraph {
public:
    explicit ProductGraph(std::vector<Graph> factors);

    const Graph& graph() const { return graph_; }
    const std::vector<Graph>& factors() const { return factors_; }
    const Graph& factor(int axis) const;
    int factor_count() const { return static_cast<int>(factors_.size()); }
    int order() const { return graph_.order(); }

    int encode(std::span<const int> tuple) const;
    std::vector<int> decode(int v) const;
    int coordinate(int v, int axis) const;
    int replace_coordinate(int v, int axis, int value) const;

private:
    void check_axis(int axis) const;

    std::vector<Graph> factors_;
    std::vector<long long> strides_;
    Graph graph_;
};

ProductGraph cartesian_product(std::vector<Graph> factors);

// axis along which the product edge (u, v) runs; throws if (u, v) is not an edge
int edge_axis(const ProductGraph& p, int u, int v);

// neighbors of u reached by moving along `axis` only
Bitset axis_neighborhood(const ProductGraph& p, int u, int axis);

// coordinates that members of s take on `axis` (a vertex set of that factor)
Bitset project(const ProductGraph& p, const Bitset& s, int axis);

} // namespace domlab
