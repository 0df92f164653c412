#include "domlab/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

namespace domlab {

const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::random_graph: return "random";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "star") return Family::star;
    if (name == "random") return Family::random_graph;
    throw std::invalid_argument("unknown family: " + name);
}

std::string FamilySpec::label() const {
    switch (family) {
        case Family::path: return "P" + std::to_string(order);
        case Family::cycle: return "C" + std::to_string(order);
        case Family::complete: return "K" + std::to_string(order);
        case Family::star: return "S" + std::to_string(order);
        case Family::random_graph: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "R%d_p%d_s%llu", order,
                          static_cast<int>(std::lround(edge_probability * 100)),
                          static_cast<unsigned long long>(seed));
            return buf;
        }
    }
    return "?";
}

namespace {

// raw 53-bit draws keep the edge decisions stable across standard libraries
bool coin(std::mt19937_64& rng, std::uint64_t threshold) { return (rng() >> 11) < threshold; }

std::vector<VertexPair> random_edges(int n, double p, std::mt19937_64& rng) {
    const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0); // 2^53
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng, threshold)) edges.emplace_back(i, j);
    return edges;
}

} // namespace

Graph generate_family(const FamilySpec& spec) {
    const int n = spec.order;
    const int lo = spec.require_no_isolated ? 2 : 1;
    std::vector<VertexPair> edges;
    switch (spec.family) {
        case Family::path:
            if (n < lo) throw std::invalid_argument("path order too small");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::cycle:
            if (n < 3) throw std::invalid_argument("cycle order must be at least 3");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            break;
        case Family::complete:
            if (n < lo) throw std::invalid_argument("complete order too small");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
        case Family::star:
            if (n < lo) throw std::invalid_argument("star order too small");
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case Family::random_graph: {
            if (n < lo) throw std::invalid_argument("random order too small");
            std::mt19937_64 rng(spec.seed);
            for (int attempt = 0; attempt < 64; ++attempt) {
                Graph g(n, random_edges(n, spec.edge_probability, rng), spec.label());
                if (!spec.require_no_isolated || !g.has_isolated_vertex()) return g;
            }
            throw std::runtime_error("random family kept producing isolated vertices: " +
                                     spec.label());
        }
    }
    return Graph(n, edges, spec.label());
}

namespace {

void append_prefixed(std::vector<LedgerFact>& dst, const std::vector<LedgerFact>& src,
                     const std::string& prefix) {
    for (const auto& f : src) dst.push_back({prefix + f.name, f.pass, f.detail});
}

LedgerFact vizing_fact(const std::vector<Graph>& factors, const Graph& prod) {
    long long lhs = 1;
    std::string expr;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const int g = domination_number(factors[i], DominationKind::plain).number;
        if (i) expr += "*";
        expr += std::to_string(g);
        lhs *= g;
    }
    const int gp = domination_number(prod, DominationKind::plain).number;
    const bool holds = lhs <= gp;
    return {"vizing-style comparison (informational)", true,
            expr + " = " + std::to_string(lhs) + (holds ? " <= " : " > ") + std::to_string(gp) +
                (holds ? "" : " [FINDING]")};
}

LedgerFact match_fact(const std::string& name, long long got, long long want) {
    return {name, got == want, std::to_string(got) + " vs " + std::to_string(want)};
}

} // namespace

TheoremReport run_theorem(int theorem_id, const std::vector<Graph>& factors, bool vizing) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool two_factor = theorem_id == 1 || theorem_id == 2 || theorem_id == 4;
    if (theorem_id < 1 || theorem_id > 5)
        throw std::invalid_argument("theorem id must be between 1 and 5");
    if (two_factor && factors.size() != 2)
        throw std::invalid_argument("this inequality takes exactly two factors");
    if (!two_factor && factors.size() < 2)
        throw std::invalid_argument("this inequality takes at least two factors");
    for (const auto& f : factors)
        if (f.has_isolated_vertex())
            throw std::domain_error("factors must be free of isolated vertices");

    TheoremReport rep;
    rep.theorem_id = theorem_id;
    for (std::size_t i = 0; i < factors.size(); ++i)
        rep.factor_labels.push_back(
            factors[i].name().empty() ? "G" + std::to_string(i + 1) : factors[i].name());
    const int n = static_cast<int>(factors.size());

    switch (theorem_id) {
        case 1: {
            const Graph& g = factors[0];
            const Graph& h = factors[1];
            const auto gt_g = domination_number(g, DominationKind::total);
            const auto gt_h = domination_number(h, DominationKind::total);
            const auto g_g = domination_number(g, DominationKind::plain);
            const auto g_h = domination_number(h, DominationKind::plain);

            auto gh = cartesian_product({g, h});
            const auto dom_gh = domination_number(gh.graph(), DominationKind::plain);
            auto hg = cartesian_product({h, g});
            const auto dom_hg = domination_number(hg.graph(), DominationKind::plain);

            rep.left = std::max<long long>(1LL * gt_g.number * g_h.number,
                                           1LL * g_g.number * gt_h.number);
            rep.right = 2LL * dom_gh.number;
            rep.constant = 2;
            rep.d_size = dom_gh.number;

            rep.ledger.push_back(match_fact("both product orientations agree on gamma",
                                            dom_gh.number, dom_hg.number));
            if (vizing) rep.ledger.push_back(vizing_fact(factors, gh.graph()));

            auto inst_gh = build_two_factor_instance(
                std::move(gh), build_partition(g, gt_g.certificate, PartitionMode::open),
                build_partition(h, g_h.certificate, PartitionMode::closed), dom_gh.certificate,
                ConditionVariant::membership_or_axis);
            const auto res_gh = double_count(inst_gh, 1);
            rep.ledger.push_back(match_fact("[G x H] block counts match the factor numbers",
                                            res_gh.cell_product,
                                            1LL * gt_g.number * g_h.number));
            append_prefixed(rep.ledger, res_gh.facts, "[G x H] ");

            auto inst_hg = build_two_factor_instance(
                std::move(hg), build_partition(h, gt_h.certificate, PartitionMode::open),
                build_partition(g, g_g.certificate, PartitionMode::closed), dom_hg.certificate,
                ConditionVariant::membership_or_axis);
            const auto res_hg = double_count(inst_hg, 1);
            rep.ledger.push_back(match_fact("[H x G] block counts match the factor numbers",
                                            res_hg.cell_product,
                                            1LL * gt_h.number * g_g.number));
            append_prefixed(rep.ledger, res_hg.facts, "[H x G] ");
            break;
        }
        case 2: {
            const Graph& g = factors[0];
            const Graph& h = factors[1];
            const auto gt_g = domination_number(g, DominationKind::total);
            const auto gt_h = domination_number(h, DominationKind::total);
            auto p = cartesian_product({g, h});
            const auto dom_p = domination_number(p.graph(), DominationKind::total);

            rep.left = 1LL * gt_g.number * gt_h.number;
            rep.right = 2LL * dom_p.number;
            rep.constant = 2;
            rep.d_size = dom_p.number;
            if (vizing) rep.ledger.push_back(vizing_fact(factors, p.graph()));

            auto inst = build_two_factor_instance(
                std::move(p), build_partition(g, gt_g.certificate, PartitionMode::open),
                build_partition(h, gt_h.certificate, PartitionMode::open), dom_p.certificate,
                ConditionVariant::axis_only);
            const auto res = double_count(inst, 2);
            rep.ledger.push_back(match_fact("block counts match the factor numbers",
                                            res.cell_product, rep.left));
            append_prefixed(rep.ledger, res.facts, "");
            break;
        }
        case 3: {
            std::vector<DominationResult> gts;
            gts.reserve(factors.size());
            long long prod_numbers = 1;
            for (const auto& f : factors) {
                gts.push_back(domination_number(f, DominationKind::total));
                prod_numbers *= gts.back().number;
            }
            auto p = cartesian_product(factors);
            const auto dom_p = domination_number(p.graph(), DominationKind::total);

            rep.left = prod_numbers;
            rep.right = 1LL * n * dom_p.number;
            rep.constant = n;
            rep.d_size = dom_p.number;
            if (vizing) rep.ledger.push_back(vizing_fact(factors, p.graph()));

            std::vector<Partition> parts;
            parts.reserve(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i)
                parts.push_back(
                    build_partition(factors[i], gts[i].certificate, PartitionMode::open));
            auto inst = build_n_factor_instance(std::move(p), std::move(parts),
                                                dom_p.certificate, ConditionVariant::min_axis);
            const auto res = double_count(inst, 3);
            rep.ledger.push_back(match_fact("block counts match the factor numbers",
                                            res.cell_product, prod_numbers));
            append_prefixed(rep.ledger, res.facts, "");
            break;
        }
        case 4: {
            const Graph& g = factors[0];
            const Graph& h = factors[1];
            const auto pr_g = domination_number(g, DominationKind::paired);
            const auto pr_h = domination_number(h, DominationKind::paired);
            auto p = cartesian_product({g, h});
            const auto dom_p = domination_number(p.graph(), DominationKind::paired);

            rep.left = 1LL * pr_g.number * pr_h.number;
            rep.right = 6LL * dom_p.number;
            rep.constant = 6;
            rep.d_size = dom_p.number;
            if (vizing) rep.ledger.push_back(vizing_fact(factors, p.graph()));

            auto inst = build_two_factor_instance(
                std::move(p), build_partition(g, pr_g.certificate, PartitionMode::paired),
                build_partition(h, pr_h.certificate, PartitionMode::paired), dom_p.certificate,
                ConditionVariant::membership_or_axis);
            const auto res = double_count(inst, 4);
            rep.ledger.push_back(match_fact("block counts match the factor pair counts",
                                            res.cell_product,
                                            (pr_g.number / 2LL) * (pr_h.number / 2LL)));
            append_prefixed(rep.ledger, res.facts, "");
            break;
        }
        case 5: {
            std::vector<DominationResult> prs;
            prs.reserve(factors.size());
            long long prod_numbers = 1, prod_pairs = 1;
            for (const auto& f : factors) {
                prs.push_back(domination_number(f, DominationKind::paired));
                prod_numbers *= prs.back().number;
                prod_pairs *= prs.back().number / 2;
            }
            auto p = cartesian_product(factors);
            const auto dom_p = domination_number(p.graph(), DominationKind::paired);

            rep.constant = (1LL << (n - 1)) * (2LL * n - 1);
            rep.left = prod_numbers;
            rep.right = rep.constant * dom_p.number;
            rep.d_size = dom_p.number;
            if (vizing) rep.ledger.push_back(vizing_fact(factors, p.graph()));

            std::vector<Partition> parts;
            parts.reserve(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i)
                parts.push_back(
                    build_partition(factors[i], prs[i].certificate, PartitionMode::paired));
            auto inst = build_n_factor_instance(std::move(p), std::move(parts), dom_p.certificate,
                                                ConditionVariant::per_axis_family);
            const auto res = double_count(inst, 5);
            rep.ledger.push_back(match_fact("block counts match the factor pair counts",
                                            res.cell_product, prod_pairs));
            append_prefixed(rep.ledger, res.facts, "");
            break;
        }
    }

    rep.ledger.push_back({"inequality holds", rep.left <= rep.right,
                          std::to_string(rep.left) + " <= " + std::to_string(rep.right)});
    rep.slack = rep.right > 0 ? static_cast<double>(rep.left) / static_cast<double>(rep.right) : 0.0;
    for (const auto& f : rep.ledger)
        if (!f.pass) ++rep.claims_failed;
    rep.pass = rep.claims_failed == 0;
    rep.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<FamilySpec> sweep_pool(const SweepConfig& cfg) {
    std::vector<Family> fams = cfg.families;
    if (fams.empty()) fams = {Family::path, Family::cycle, Family::complete, Family::star};
    std::vector<Family> uniq;
    for (Family f : fams)
        if (std::find(uniq.begin(), uniq.end(), f) == uniq.end()) uniq.push_back(f);

    std::vector<FamilySpec> pool;
    for (Family f : uniq) {
        if (f == Family::random_graph) continue;
        const int lo = f == Family::cycle ? 3 : 2;
        for (int order = lo; order <= cfg.max_factor_order; ++order)
            pool.push_back({f, order, cfg.edge_probability, 0, true});
    }
    const bool wants_random =
        std::find(uniq.begin(), uniq.end(), Family::random_graph) != uniq.end();
    const int rcount = cfg.random_count > 0 ? cfg.random_count : (wants_random ? 4 : 0);
    const int span = std::max(1, cfg.max_factor_order - 1);
    for (int i = 0; i < rcount; ++i)
        pool.push_back({Family::random_graph, 2 + i % span, cfg.edge_probability,
                        cfg.seed + static_cast<std::uint64_t>(i), true});
    return pool;
}

std::vector<TheoremReport> sweep(const SweepConfig& cfg) {
    const bool two_factor = cfg.theorem_id == 1 || cfg.theorem_id == 2 || cfg.theorem_id == 4;
    int k = cfg.factor_count;
    if (k == 0) k = two_factor ? 2 : 3;
    if (two_factor && k != 2)
        throw std::invalid_argument("this inequality sweeps over factor pairs only");
    if (k < 2) throw std::invalid_argument("sweep needs at least two factors per instance");
    long long cap = cfg.max_product_order;
    if (cap == 0) cap = cfg.theorem_id <= 3 ? 30 : 24;

    const auto specs = sweep_pool(cfg);
    std::vector<Graph> pool;
    pool.reserve(specs.size());
    for (const auto& s : specs) pool.push_back(generate_family(s));
    if (pool.empty()) return {};

    std::vector<std::vector<Graph>> instances;
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    while (true) {
        long long prod = 1;
        for (int i : pick) prod *= pool[static_cast<std::size_t>(i)].order();
        if (prod <= cap) {
            std::vector<Graph> fs;
            fs.reserve(pick.size());
            for (int i : pick) fs.push_back(pool[static_cast<std::size_t>(i)]);
            instances.push_back(std::move(fs));
        }
        int pos = k - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == static_cast<int>(pool.size()) - 1)
            --pos;
        if (pos < 0) break;
        const int v = pick[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < k; ++i) pick[static_cast<std::size_t>(i)] = v;
    }

    std::vector<TheoremReport> reports(instances.size());
    const int jobs = std::max(1, cfg.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            try {
                reports[i] = run_theorem(cfg.theorem_id, instances[i], cfg.vizing);
            } catch (const std::exception& e) {
                TheoremReport r;
                r.theorem_id = cfg.theorem_id;
                for (const auto& g : instances[i]) r.factor_labels.push_back(g.name());
                r.claims_failed = 1;
                r.ledger.push_back({"run failed", false, e.what()});
                reports[i] = std::move(r);
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return reports;
}

SweepSummary summarize(const std::vector<TheoremReport>& reports) {
    SweepSummary s;
    s.rows = static_cast<int>(reports.size());
    double total = 0.0;
    for (const auto& r : reports) {
        if (!r.pass) ++s.failures;
        total += r.slack;
        if (s.min_slack == 0.0 || (r.slack > 0.0 && r.slack < s.min_slack)) s.min_slack = r.slack;
    }
    if (s.rows > 0) s.mean_slack = total / s.rows;
    return s;
}

void sweep_csv(const std::vector<TheoremReport>& reports, std::ostream& out, bool timing) {
    out << "theorem,factors,left,right,constant,D_size,slack,pass,claims_failed,millis\n";
    for (const auto& r : reports) {
        std::string factors;
        for (std::size_t i = 0; i < r.factor_labels.size(); ++i) {
            if (i) factors += " x ";
            factors += r.factor_labels[i];
        }
        char slack[32];
        std::snprintf(slack, sizeof slack, "%.6f", r.slack);
        out << r.theorem_id << ',' << factors << ',' << r.left << ',' << r.right << ','
            << r.constant << ',' << r.d_size << ',' << slack << ',' << (r.pass ? 1 : 0) << ','
            << r.claims_failed << ','
            << (timing ? static_cast<long long>(std::llround(r.wall_ms)) : 0LL) << '\n';
    }
}

namespace {

nlohmann::json to_json(const TheoremReport& r) {
    nlohmann::json ledger = nlohmann::json::array();
    for (const auto& f : r.ledger)
        ledger.push_back({{"name", f.name}, {"pass", f.pass}, {"detail", f.detail}});
    return {{"theorem", r.theorem_id}, {"factors", r.factor_labels},
            {"left", r.left},          {"right", r.right},
            {"constant", r.constant},  {"d_size", r.d_size},
            {"slack", r.slack},        {"pass", r.pass},
            {"claims_failed", r.claims_failed}, {"wall_ms", r.wall_ms},
            {"ledger", ledger}};
}

} // namespace

std::string report_json(const TheoremReport& report) { return to_json(report).dump(2); }

std::string sweep_json(const std::vector<TheoremReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2);
}

} // namespace domlab
