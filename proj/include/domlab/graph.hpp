#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domlab/bitset.hpp"

namespace domlab {

using VertexPair = std::pair<int, int>;

// Simple undirected graph, immutable after construction. Adjacency is stored
// as one bit-packed row per vertex. Self-loops are rejected; duplicate edges
// collapse silently.
class Graph {
public:
    explicit Graph(int order, std::span<const VertexPair> edges = {}, std::string name = "");

    int order() const { return order_; }
    const std::string& name() const { return name_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    long long edge_count() const { return edge_count_; }
    bool has_isolated_vertex() const;

    // N(v) as a bitset over the vertex range
    const Bitset& neighbors_open(int v) const;
    // N[v]
    Bitset neighbors_closed(int v) const;

    // edges as (u, v) with u < v, in ascending order
    std::vector<VertexPair> edge_list() const;

private:
    void check_vertex(int v) const;

    int order_ = 0;
    std::string name_;
    std::vector<Bitset> adj_;
    long long edge_count_ = 0;
};

// Edge-list file format: optional '#' comment lines, then one line holding the
// vertex count, then one "u v" line per edge. Parse errors name the offending line.
Graph parse_edge_list(std::istream& in, std::string name = "");
Graph load_edge_list(const std::filesystem::path& path);
void write_edge_list(const Graph& g, std::ostream& out);

} // namespace domlab
