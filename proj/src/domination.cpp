#include "domlab/domination.hpp"

#include <algorithm>
#include <stdexcept>

#include "domlab/matching.hpp"

namespace domlab {

const char* kind_name(DominationKind k) {
    switch (k) {
        case DominationKind::plain: return "plain";
        case DominationKind::total: return "total";
        case DominationKind::paired: return "paired";
    }
    return "?";
}

const char* gamma_symbol(DominationKind k) {
    switch (k) {
        case DominationKind::plain: return "gamma";
        case DominationKind::total: return "gamma_t";
        case DominationKind::paired: return "gamma_pr";
    }
    return "?";
}

namespace {

void check_set(const Graph& g, const Bitset& s, const char* who) {
    if (s.capacity() != g.order())
        throw std::invalid_argument(std::string(who) + ": set does not match graph order");
}

} // namespace

bool is_dominating(const Graph& g, const Bitset& s) {
    check_set(g, s, "is_dominating");
    Bitset covered = s;
    s.for_each([&](int v) { covered |= g.neighbors_open(v); });
    return covered.count() == g.order();
}

bool is_total_dominating(const Graph& g, const Bitset& s) {
    check_set(g, s, "is_total_dominating");
    Bitset covered(g.order());
    s.for_each([&](int v) { covered |= g.neighbors_open(v); });
    return covered.count() == g.order();
}

PairedCheck is_paired_dominating(const Graph& g, const Bitset& s) {
    check_set(g, s, "is_paired_dominating");
    PairedCheck out;
    if (s.count() % 2 != 0) return out;
    if (!is_dominating(g, s)) return out;
    auto matching = max_matching_in_induced(g, s);
    if (static_cast<int>(matching.size()) * 2 != s.count()) return out;
    out.ok = true;
    out.pairing = std::move(matching);
    return out;
}

std::vector<VertexPair> normalized_pairing(std::vector<VertexPair> pairs) {
    for (auto& [a, b] : pairs)
        if (a > b) std::swap(a, b);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

bool certificate_valid(const Graph& g, const DominationCertificate& cert) {
    if (cert.members.capacity() != g.order()) return false;
    switch (cert.kind) {
        case DominationKind::plain:
            return is_dominating(g, cert.members);
        case DominationKind::total:
            return is_total_dominating(g, cert.members);
        case DominationKind::paired: {
            if (!is_dominating(g, cert.members)) return false;
            if (static_cast<int>(cert.pairing.size()) * 2 != cert.members.count()) return false;
            Bitset seen(g.order());
            for (auto [a, b] : cert.pairing) {
                if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || a == b) return false;
                if (!g.adjacent(a, b)) return false;
                if (!cert.members.test(a) || !cert.members.test(b)) return false;
                if (seen.test(a) || seen.test(b)) return false;
                seen.set(a);
                seen.set(b);
            }
            return true;
        }
    }
    return false;
}

namespace {

// Branch-and-bound core for the plain and total kinds. Branches on the
// lowest-index undominated vertex; candidate dominators ascending; candidates
// already tried at a node are excluded below it, so each solution is visited
// once.
struct CoverSearch {
    const Graph& g;
    bool total;
    int n;
    std::vector<Bitset> closed;

    explicit CoverSearch(const Graph& graph, bool total_kind)
        : g(graph), total(total_kind), n(graph.order()) {
        closed.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) closed.push_back(g.neighbors_closed(v));
    }

    const Bitset& cover(int v) const {
        return total ? g.neighbors_open(v) : closed[static_cast<std::size_t>(v)];
    }

    // largest number of still-undominated vertices any allowed candidate covers
    int max_cover(const Bitset& dominated, const Bitset& excluded) const {
        int best = 0;
        for (int v = 0; v < n; ++v) {
            if (excluded.test(v)) continue;
            Bitset c = cover(v);
            c.subtract(dominated);
            best = std::max(best, c.count());
        }
        return best;
    }

    int best = 0;

    void minimize(int size, const Bitset& dominated, Bitset& excluded) {
        const int undominated = n - dominated.count();
        if (undominated == 0) {
            best = size;
            return;
        }
        const int cmax = max_cover(dominated, excluded);
        if (cmax == 0) return;
        if (size + (undominated + cmax - 1) / cmax >= best) return;
        const int v = [&] {
            for (int u = 0;; ++u)
                if (!dominated.test(u)) return u;
        }();
        Bitset cands = cover(v); // dominators of v coincide with cover(v) by symmetry
        cands.subtract(excluded);
        for (int a = cands.first(); a >= 0; a = cands.next(a)) {
            minimize(size + 1, dominated | cover(a), excluded);
            excluded.set(a);
        }
        excluded.subtract(cands); // restore
    }

    int minimum() {
        best = n; // the whole vertex set is always admissible here
        Bitset dominated(n), excluded(n);
        minimize(0, dominated, excluded);
        return best;
    }

    bool feasible_rec(int size, int cap, const Bitset& dominated, Bitset& excluded) {
        const int undominated = n - dominated.count();
        if (undominated == 0) return true;
        const int cmax = max_cover(dominated, excluded);
        if (cmax == 0) return false;
        if (size + (undominated + cmax - 1) / cmax > cap) return false;
        const int v = [&] {
            for (int u = 0;; ++u)
                if (!dominated.test(u)) return u;
        }();
        Bitset cands = cover(v);
        cands.subtract(excluded);
        bool found = false;
        for (int a = cands.first(); a >= 0 && !found; a = cands.next(a)) {
            found = feasible_rec(size + 1, cap, dominated | cover(a), excluded);
            excluded.set(a);
        }
        excluded.subtract(cands);
        return found;
    }

    // does some valid set of size <= cap extend seed?
    bool feasible(const Bitset& seed, int cap) {
        if (seed.count() > cap) return false;
        Bitset dominated(n);
        if (!total) dominated = seed;
        seed.for_each([&](int v) { dominated |= g.neighbors_open(v); });
        Bitset excluded(n);
        return feasible_rec(seed.count(), cap, dominated, excluded);
    }
};

// Branch-and-bound for the paired kind: branch over vertex-disjoint candidate
// pairs (a, b) with a in N[v] for the lowest undominated v and (a, b) an edge.
struct PairedSearch {
    const Graph& g;
    int n;
    std::vector<Bitset> closed;

    explicit PairedSearch(const Graph& graph) : g(graph), n(graph.order()) {
        closed.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) closed.push_back(g.neighbors_closed(v));
    }

    int max_cover(const Bitset& dominated) const {
        int best = 0;
        for (int v = 0; v < n; ++v) {
            Bitset c = closed[static_cast<std::size_t>(v)];
            c.subtract(dominated);
            best = std::max(best, c.count());
        }
        return best;
    }

    std::vector<VertexPair> pair_candidates(int anchor, bool anchor_closed, const Bitset& s) const {
        // pairs (a, b): a in N[anchor] (or a == anchor forced), b in N(a), both outside s
        std::vector<VertexPair> out;
        Bitset anchors = anchor_closed ? closed[static_cast<std::size_t>(anchor)] : Bitset(n);
        if (!anchor_closed) anchors.set(anchor);
        anchors.subtract(s);
        anchors.for_each([&](int a) {
            Bitset bs = g.neighbors_open(a);
            bs.subtract(s);
            bs.for_each([&](int b) { out.emplace_back(std::min(a, b), std::max(a, b)); });
        });
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    int best = 0;

    void minimize(Bitset& s, int size, const Bitset& dominated) {
        const int undominated = n - dominated.count();
        if (undominated == 0) {
            best = size;
            return;
        }
        const int cmax = max_cover(dominated);
        const int need = (undominated + 2 * cmax - 1) / (2 * cmax);
        if (size + 2 * need >= best) return;
        const int v = [&] {
            for (int u = 0;; ++u)
                if (!dominated.test(u)) return u;
        }();
        for (auto [a, b] : pair_candidates(v, true, s)) {
            s.set(a);
            s.set(b);
            minimize(s, size + 2,
                     dominated | closed[static_cast<std::size_t>(a)] |
                         closed[static_cast<std::size_t>(b)]);
            s.reset(a);
            s.reset(b);
        }
    }

    int minimum() {
        // vertex set of any maximal matching is paired dominating: usable upper bound
        Bitset matched(n);
        int matched_count = 0;
        for (int u = 0; u < n; ++u) {
            if (matched.test(u)) continue;
            Bitset cands = g.neighbors_open(u);
            cands.subtract(matched);
            const int w = cands.first();
            if (w >= 0) {
                matched.set(u);
                matched.set(w);
                matched_count += 2;
            }
        }
        best = matched_count;
        Bitset s(n), dominated(n);
        minimize(s, 0, dominated);
        return best;
    }

    bool feasible_rec(Bitset& s, int size, int cap, const Bitset& dominated, const Bitset& forced) {
        Bitset missing = forced;
        missing.subtract(s);
        const int undominated = n - dominated.count();
        if (missing.none() && undominated == 0) return true;
        const int cmax = max_cover(dominated);
        int need = (missing.count() + 1) / 2;
        if (undominated > 0) need = std::max(need, (undominated + 2 * cmax - 1) / (2 * cmax));
        if (size + 2 * need > cap) return false;
        std::vector<VertexPair> cands;
        const int p = missing.first();
        if (p >= 0)
            cands = pair_candidates(p, false, s);
        else {
            const int v = [&] {
                for (int u = 0;; ++u)
                    if (!dominated.test(u)) return u;
            }();
            cands = pair_candidates(v, true, s);
        }
        for (auto [a, b] : cands) {
            s.set(a);
            s.set(b);
            if (feasible_rec(s, size + 2, cap,
                             dominated | closed[static_cast<std::size_t>(a)] |
                                 closed[static_cast<std::size_t>(b)],
                             forced))
                return true;
            s.reset(a);
            s.reset(b);
        }
        return false;
    }

    // does some paired dominating set of size <= cap contain all of `forced`?
    bool feasible(const Bitset& forced, int cap) {
        if (forced.count() > cap) return false;
        Bitset s(n), dominated(n);
        return feasible_rec(s, 0, cap, dominated, forced);
    }
};

// lexicographically smallest perfect matching of the subgraph induced by members
std::vector<VertexPair> lex_min_perfect_matching(const Graph& g, const Bitset& members) {
    std::vector<VertexPair> out;
    Bitset rem = members;
    while (rem.any()) {
        const int u = rem.first();
        Bitset nbrs = g.neighbors_open(u);
        nbrs &= rem;
        bool extended = false;
        for (int w = nbrs.first(); w >= 0; w = nbrs.next(w)) {
            Bitset rest = rem;
            rest.reset(u);
            rest.reset(w);
            if (static_cast<int>(max_matching_in_induced(g, rest).size()) * 2 == rest.count()) {
                out.emplace_back(u, w);
                rem = rest;
                extended = true;
                break;
            }
        }
        if (!extended) throw std::logic_error("no perfect matching on certificate members");
    }
    return out;
}

template <typename Feasible>
Bitset lex_min_members(int n, int k, Feasible&& feasible) {
    Bitset chosen(n);
    for (int v = 0; v < n && chosen.count() < k; ++v) {
        Bitset cand = chosen;
        cand.set(v);
        if (feasible(cand)) chosen = cand;
    }
    if (chosen.count() != k) throw std::logic_error("lexicographic completion failed");
    return chosen;
}

} // namespace

DominationResult domination_number(const Graph& g, DominationKind kind) {
    if (kind != DominationKind::plain && g.has_isolated_vertex())
        throw std::domain_error(std::string(kind_name(kind)) +
                                " domination is undefined for graphs with isolated vertices");
    DominationResult result;
    result.certificate.kind = kind;
    if (kind == DominationKind::paired) {
        PairedSearch ps(g);
        const int k = ps.minimum();
        result.number = k;
        result.certificate.members =
            lex_min_members(g.order(), k, [&](const Bitset& cand) { return ps.feasible(cand, k); });
        result.certificate.pairing = lex_min_perfect_matching(g, result.certificate.members);
    } else {
        CoverSearch cs(g, kind == DominationKind::total);
        const int k = cs.minimum();
        result.number = k;
        result.certificate.members =
            lex_min_members(g.order(), k, [&](const Bitset& cand) { return cs.feasible(cand, k); });
    }
    if (!certificate_valid(g, result.certificate))
        throw std::logic_error("solver produced an invalid certificate");
    return result;
}

int brute_force_number(const Graph& g, DominationKind kind) {
    if (kind != DominationKind::plain && g.has_isolated_vertex())
        throw std::domain_error(std::string(kind_name(kind)) +
                                " domination is undefined for graphs with isolated vertices");
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            Bitset s(n);
            for (int v : idx) s.set(v);
            const bool ok = kind == DominationKind::plain  ? is_dominating(g, s)
                            : kind == DominationKind::total ? is_total_dominating(g, s)
                                                            : is_paired_dominating(g, s).ok;
            if (ok) return k;
            // next k-combination
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw std::logic_error("no admissible set of any size");
}

} // namespace domlab
