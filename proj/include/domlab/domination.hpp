#pragma once

#include <string>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

enum class DominationKind { plain, total, paired };

const char* kind_name(DominationKind k);   // "plain" / "total" / "paired"
const char* gamma_symbol(DominationKind k); // "gamma" / "gamma_t" / "gamma_pr"

// Minimum certificate: for paired kind the pairing is a perfect matching of
// the subgraph induced by the members, as normalized vertex-disjoint edges.
struct DominationCertificate {
    DominationKind kind = DominationKind::plain;
    Bitset members;
    std::vector<VertexPair> pairing;
};

bool is_dominating(const Graph& g, const Bitset& s);
bool is_total_dominating(const Graph& g, const Bitset& s);

struct PairedCheck {
    bool ok = false;
    std::vector<VertexPair> pairing; // witness matching when ok
};
PairedCheck is_paired_dominating(const Graph& g, const Bitset& s);

// Full validation, including an explicitly supplied pairing for the paired kind.
bool certificate_valid(const Graph& g, const DominationCertificate& cert);

// sort pairs, low endpoint first
std::vector<VertexPair> normalized_pairing(std::vector<VertexPair> pairs);

struct DominationResult {
    int number = 0;
    DominationCertificate certificate;
};

// Exact minimum via branch and bound: branch on the lowest-index undominated
// vertex, candidates in ascending order; ties between minimum certificates
// resolve to the lexicographically smallest member set. Total and paired kinds
// reject graphs with an isolated vertex (std::domain_error).
DominationResult domination_number(const Graph& g, DominationKind kind);

// Independent oracle: enumerate subsets in increasing size order and test the
// is_* predicates. Intended for small orders (about 20 and below).
int brute_force_number(const Graph& g, DominationKind kind);

} // namespace domlab
