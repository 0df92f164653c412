#include "domlab/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace domlab {

namespace {

struct MatchingSearch {
    std::vector<std::uint64_t> adj; // compacted adjacency masks
    std::unordered_map<std::uint64_t, int> memo;

    int best(std::uint64_t mask) {
        if (!mask) return 0;
        const auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const int v = std::countr_zero(mask);
        const std::uint64_t rest = mask & (mask - 1);
        int r = best(rest); // v stays unmatched
        std::uint64_t nbrs = adj[static_cast<std::size_t>(v)] & rest;
        while (nbrs) {
            const int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            r = std::max(r, 1 + best(rest & ~(std::uint64_t{1} << u)));
        }
        memo.emplace(mask, r);
        return r;
    }
};

} // namespace

std::vector<VertexPair> max_matching_in_induced(const Graph& g, const Bitset& s) {
    if (s.capacity() != g.order())
        throw std::invalid_argument("max_matching_in_induced: set does not match graph order");
    const std::vector<int> verts = s.to_vector();
    const int m = static_cast<int>(verts.size());
    if (m > 64) throw std::invalid_argument("max_matching_in_induced: induced subgraph too large");

    MatchingSearch ms;
    ms.adj.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)])) {
                ms.adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                ms.adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }

    // walk an optimal matching back out, preferring low indices
    std::vector<VertexPair> out;
    std::uint64_t mask = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    while (mask) {
        const int target = ms.best(mask);
        const int v = std::countr_zero(mask);
        const std::uint64_t rest = mask & (mask - 1);
        if (ms.best(rest) == target) {
            mask = rest;
            continue;
        }
        std::uint64_t nbrs = ms.adj[static_cast<std::size_t>(v)] & rest;
        bool advanced = false;
        while (nbrs) {
            const int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            const std::uint64_t next = rest & ~(std::uint64_t{1} << u);
            if (1 + ms.best(next) == target) {
                out.emplace_back(verts[static_cast<std::size_t>(v)],
                                 verts[static_cast<std::size_t>(u)]);
                mask = next;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("matching reconstruction failed");
    }
    return out;
}

} // namespace domlab
