#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "domlab/matching.hpp"
#include "test_util.hpp"

using namespace domlab;

namespace {

// independent oracle: try all edge subsets of the induced subgraph
int oracle_max_matching(const Graph& g, const Bitset& s) {
    std::vector<VertexPair> edges;
    for (const auto& [u, v] : g.edge_list())
        if (s.test(u) && s.test(v)) edges.emplace_back(u, v);
    const int m = static_cast<int>(edges.size());
    int best = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
        Bitset used(g.order());
        int size = 0;
        bool ok = true;
        for (int e = 0; e < m && ok; ++e) {
            if (!(mask & (1 << e))) continue;
            const auto [u, v] = edges[static_cast<std::size_t>(e)];
            if (used.test(u) || used.test(v)) ok = false;
            used.set(u);
            used.set(v);
            ++size;
        }
        if (ok && size > best) best = size;
    }
    return best;
}

Graph random_graph(int n, std::mt19937_64& rng) {
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

} // namespace

TEST_CASE("matchings on fixed graphs") {
    const Graph c4 = testutil::cycle(4);
    CHECK(max_matching_in_induced(c4, Bitset::full(4)).size() == 2);

    const Graph p3 = testutil::path(3);
    CHECK(max_matching_in_induced(p3, Bitset::full(3)).size() == 1);

    CHECK(max_matching_in_induced(p3, Bitset(3)).empty());
    CHECK(max_matching_in_induced(c4, Bitset::of(4, {0, 2})).empty());
}

TEST_CASE("matched pairs are disjoint induced edges") {
    const Graph c6 = testutil::cycle(6);
    const Bitset s = Bitset::of(6, {0, 1, 2, 3, 5});
    const auto m = max_matching_in_induced(c6, s);
    Bitset used(6);
    for (const auto& [u, v] : m) {
        CHECK(u < v);
        CHECK(c6.adjacent(u, v));
        CHECK(s.test(u));
        CHECK(s.test(v));
        CHECK_FALSE(used.test(u));
        CHECK_FALSE(used.test(v));
        used.set(u);
        used.set(v);
    }
}

TEST_CASE("matching size agrees with the edge-subset oracle") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph g = random_graph(n, rng);
        Bitset s(n);
        for (int v = 0; v < n; ++v)
            if (rng() & 1) s.set(v);
        CHECK(static_cast<int>(max_matching_in_induced(g, s).size()) == oracle_max_matching(g, s));
    }
}

TEST_CASE("capacity mismatch is an error") {
    const Graph p3 = testutil::path(3);
    CHECK_THROWS_AS(max_matching_in_induced(p3, Bitset(4)), std::invalid_argument);
}
