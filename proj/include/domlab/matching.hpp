#pragma once

#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

// Exact maximum matching in the subgraph induced by s, as vertex-disjoint
// edges (a, b) with a < b, sorted. Exhaustive search with memoization over the
// remaining-vertex mask; the induced subgraph may have at most 64 vertices.
std::vector<VertexPair> max_matching_in_induced(const Graph& g, const Bitset& s);

} // namespace domlab
