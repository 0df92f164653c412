#include "domlab/product.hpp"

#include <stdexcept>
#include <string>

namespace domlab {

namespace {

std::vector<long long> compute_strides(const std::vector<Graph>& factors) {
    if (factors.size() < 2)
        throw std::invalid_argument("cartesian product needs at least 2 factors");
    std::vector<long long> strides(factors.size(), 1);
    for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
        strides[static_cast<std::size_t>(i)] =
            strides[static_cast<std::size_t>(i) + 1] *
            factors[static_cast<std::size_t>(i) + 1].order();
    return strides;
}

Graph build_product_graph(const std::vector<Graph>& factors,
                          const std::vector<long long>& strides) {
    long long order = 1;
    for (const auto& f : factors) {
        order *= f.order();
        if (order > (1LL << 24))
            throw std::invalid_argument("product order too large");
    }
    std::string name;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) name += " x ";
        name += factors[i].name().empty() ? ("f" + std::to_string(i)) : factors[i].name();
    }
    std::vector<VertexPair> edges;
    const int n = static_cast<int>(order);
    for (int u = 0; u < n; ++u) {
        for (std::size_t axis = 0; axis < factors.size(); ++axis) {
            const int coord = static_cast<int>((u / strides[axis]) % factors[axis].order());
            factors[axis].neighbors_open(coord).for_each([&](int c2) {
                if (c2 > coord)
                    edges.emplace_back(u, u + static_cast<int>((c2 - coord) * strides[axis]));
            });
        }
    }
    return Graph(n, edges, std::move(name));
}

} // namespace

ProductGraph::ProductGraph(std::vector<Graph> factors)
    : factors_(std::move(factors)),
      strides_(compute_strides(factors_)),
      graph_(build_product_graph(factors_, strides_)) {}

void ProductGraph::check_axis(int axis) const {
    if (axis < 0 || axis >= factor_count()) throw std::out_of_range("axis out of range");
}

const Graph& ProductGraph::factor(int axis) const {
    check_axis(axis);
    return factors_[static_cast<std::size_t>(axis)];
}

int ProductGraph::encode(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != factor_count())
        throw std::invalid_argument("tuple arity does not match factor count");
    long long v = 0;
    for (int i = 0; i < factor_count(); ++i) {
        const int c = tuple[static_cast<std::size_t>(i)];
        if (c < 0 || c >= factors_[static_cast<std::size_t>(i)].order())
            throw std::out_of_range("tuple coordinate out of range");
        v += c * strides_[static_cast<std::size_t>(i)];
    }
    return static_cast<int>(v);
}

std::vector<int> ProductGraph::decode(int v) const {
    if (v < 0 || v >= order()) throw std::out_of_range("product vertex out of range");
    std::vector<int> tuple(static_cast<std::size_t>(factor_count()));
    for (int i = 0; i < factor_count(); ++i)
        tuple[static_cast<std::size_t>(i)] = coordinate(v, i);
    return tuple;
}

int ProductGraph::coordinate(int v, int axis) const {
    if (v < 0 || v >= order()) throw std::out_of_range("product vertex out of range");
    check_axis(axis);
    return static_cast<int>((v / strides_[static_cast<std::size_t>(axis)]) %
                            factors_[static_cast<std::size_t>(axis)].order());
}

int ProductGraph::replace_coordinate(int v, int axis, int value) const {
    check_axis(axis);
    if (value < 0 || value >= factors_[static_cast<std::size_t>(axis)].order())
        throw std::out_of_range("coordinate out of range");
    const int old = coordinate(v, axis);
    return v + static_cast<int>((value - old) * strides_[static_cast<std::size_t>(axis)]);
}

ProductGraph cartesian_product(std::vector<Graph> factors) {
    return ProductGraph(std::move(factors));
}

int edge_axis(const ProductGraph& p, int u, int v) {
    if (!p.graph().adjacent(u, v)) throw std::invalid_argument("edge_axis: not an edge");
    for (int axis = 0; axis < p.factor_count(); ++axis)
        if (p.coordinate(u, axis) != p.coordinate(v, axis)) return axis;
    throw std::logic_error("edge_axis: identical endpoints");
}

Bitset axis_neighborhood(const ProductGraph& p, int u, int axis) {
    const int coord = p.coordinate(u, axis);
    Bitset out(p.order());
    p.factor(axis).neighbors_open(coord).for_each(
        [&](int c2) { out.set(p.replace_coordinate(u, axis, c2)); });
    return out;
}

Bitset project(const ProductGraph& p, const Bitset& s, int axis) {
    if (s.capacity() != p.order())
        throw std::invalid_argument("project: set does not match product order");
    Bitset out(p.factor(axis).order());
    s.for_each([&](int v) { out.set(p.coordinate(v, axis)); });
    return out;
}

} // namespace domlab
