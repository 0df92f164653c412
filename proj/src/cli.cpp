#include "domlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "domlab/domination.hpp"
#include "domlab/graph.hpp"
#include "domlab/harness.hpp"
#include "domlab/product.hpp"

namespace domlab::cli {

namespace {

DominationKind kind_from_name(const std::string& name) {
    if (name == "plain") return DominationKind::plain;
    if (name == "total") return DominationKind::total;
    if (name == "paired") return DominationKind::paired;
    throw std::invalid_argument("unknown kind: " + name);
}

std::string set_string(const Bitset& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

std::string pairs_string(const std::vector<VertexPair>& pairs) {
    std::string out = "{";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(pairs[i].first) + "-" + std::to_string(pairs[i].second);
    }
    return out + "}";
}

int parse_index(const std::string& tok) {
    int v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || v < 0)
        throw std::invalid_argument("bad vertex index: '" + tok + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_index(tok));
    return out;
}

std::vector<VertexPair> parse_pairs(const std::string& text) {
    std::vector<VertexPair> out;
    for (const auto& tok : split(text, ',')) {
        const auto parts = split(tok, '-');
        if (parts.size() != 2) throw std::invalid_argument("bad pair: '" + tok + "'");
        out.emplace_back(parse_index(parts[0]), parse_index(parts[1]));
    }
    return out;
}

void write_payload(const std::string& payload, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << payload;
}

int cmd_solve(const std::string& graph_path, const std::string& kind_s, std::ostream& out) {
    const Graph g = load_edge_list(graph_path);
    const DominationKind kind = kind_from_name(kind_s);
    const auto res = domination_number(g, kind);
    out << gamma_symbol(kind) << " = " << res.number
        << "; set = " << set_string(res.certificate.members);
    if (kind == DominationKind::paired) out << "; pairs = " << pairs_string(res.certificate.pairing);
    out << "\n";
    return 0;
}

int cmd_product(const std::vector<std::string>& files, const std::string& out_path,
                std::ostream& out) {
    std::vector<Graph> factors;
    factors.reserve(files.size());
    for (const auto& f : files) factors.push_back(load_edge_list(f));
    const auto p = cartesian_product(std::move(factors));
    std::ostringstream payload;
    write_edge_list(p.graph(), payload);
    write_payload(payload.str(), out_path, out);
    return 0;
}

int cmd_verify(int theorem, const std::vector<std::string>& files, bool json, bool vizing,
               std::ostream& out) {
    std::vector<Graph> factors;
    factors.reserve(files.size());
    for (const auto& f : files) factors.push_back(load_edge_list(f));
    const auto rep = run_theorem(theorem, factors, vizing);
    if (json) {
        out << report_json(rep) << "\n";
    } else {
        out << "theorem " << rep.theorem_id << " on ";
        for (std::size_t i = 0; i < rep.factor_labels.size(); ++i)
            out << (i ? " x " : "") << rep.factor_labels[i];
        out << "\n  left = " << rep.left << ", right = " << rep.right << " (constant "
            << rep.constant << ", certificate size " << rep.d_size << ")\n";
        for (const auto& f : rep.ledger)
            out << "  [" << (f.pass ? "pass" : "FAIL") << "] " << f.name << ": " << f.detail
                << "\n";
        out << (rep.pass ? "PASS" : "FAIL") << " (claims failed: " << rep.claims_failed << ")\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& out_path, bool json, std::ostream& out,
              std::ostream& err) {
    const auto reports = sweep(cfg);
    std::string payload;
    if (json) {
        payload = sweep_json(reports) + "\n";
    } else {
        std::ostringstream oss;
        sweep_csv(reports, oss, cfg.timing);
        payload = oss.str();
    }
    write_payload(payload, out_path, out);
    const auto summary = summarize(reports);
    char line[128];
    std::snprintf(line, sizeof line, "rows=%d failures=%d min_slack=%.6f mean_slack=%.6f\n",
                  summary.rows, summary.failures, summary.min_slack, summary.mean_slack);
    err << line;
    return summary.failures == 0 ? 0 : 1;
}

int cmd_check(const std::string& graph_path, const std::string& kind_s, const std::string& set_s,
              const std::string& pairs_s, std::ostream& out) {
    const Graph g = load_edge_list(graph_path);
    const DominationKind kind = kind_from_name(kind_s);
    if (!pairs_s.empty() && kind != DominationKind::paired)
        throw std::invalid_argument("--pairs applies to the paired kind only");
    Bitset members(g.order());
    for (int v : parse_index_list(set_s)) {
        if (v >= g.order()) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        members.set(v);
    }
    bool ok = false;
    switch (kind) {
        case DominationKind::plain:
            ok = is_dominating(g, members);
            break;
        case DominationKind::total:
            ok = is_total_dominating(g, members);
            break;
        case DominationKind::paired:
            if (pairs_s.empty()) {
                ok = is_paired_dominating(g, members).ok;
            } else {
                DominationCertificate cert{kind, members, normalized_pairing(parse_pairs(pairs_s))};
                ok = certificate_valid(g, cert);
            }
            break;
    }
    out << (ok ? "valid" : "invalid") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact domination solvers and product-inequality verification"};
    app.name("domlab");
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "exact domination number with a lex-min certificate");
    std::string solve_kind = "plain", solve_graph;
    solve->add_option("--kind", solve_kind, "plain, total, or paired")
        ->check(CLI::IsMember({"plain", "total", "paired"}));
    solve->add_option("--graph", solve_graph, "edge list file")->required();

    auto* product = app.add_subcommand("product", "Cartesian product of edge-list graphs");
    std::vector<std::string> product_files;
    std::string product_out;
    product->add_option("files", product_files, "factor edge-list files")->expected(2, -1);
    product->add_option("--out", product_out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "verify one inequality on explicit factors");
    int verify_theorem = 0;
    std::vector<std::string> verify_files;
    bool verify_json = false, verify_vizing = false;
    verify->add_option("--theorem", verify_theorem, "inequality id, 1 to 5")
        ->required()
        ->check(CLI::Range(1, 5));
    verify->add_option("--factors", verify_files, "factor edge-list files")->required()->expected(2, -1);
    verify->add_flag("--json", verify_json, "emit the JSON report");
    verify->add_flag("--vizing", verify_vizing, "append the informational gamma comparison");

    auto* sweep_cmd = app.add_subcommand("sweep", "verify one inequality across factor families");
    SweepConfig cfg;
    std::vector<std::string> sweep_families;
    std::string sweep_out;
    bool sweep_json_flag = false;
    sweep_cmd->add_option("--theorem", cfg.theorem_id, "inequality id, 1 to 5")
        ->required()
        ->check(CLI::Range(1, 5));
    sweep_cmd->add_option("--families", sweep_families,
                          "path, cycle, complete, star, random (default: first four)")
        ->delimiter(',');
    sweep_cmd->add_option("--max-factor-order", cfg.max_factor_order, "largest factor order");
    sweep_cmd->add_option("--max-order", cfg.max_product_order,
                          "largest product order (0 picks the per-theorem default)");
    sweep_cmd->add_option("--factor-count", cfg.factor_count,
                          "factors per instance (0 picks the per-theorem default)");
    sweep_cmd->add_option("--random-count", cfg.random_count, "random factors added to the pool");
    sweep_cmd->add_option("--edge-prob", cfg.edge_probability, "random family edge probability")
        ->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--seed", cfg.seed, "seed for the random family");
    sweep_cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    sweep_cmd->add_option("--out", sweep_out, "output file (default stdout)");
    sweep_cmd->add_flag("--json", sweep_json_flag, "emit JSON reports instead of CSV");
    sweep_cmd->add_flag("--vizing", cfg.vizing, "append the informational gamma comparison");
    sweep_cmd->add_flag("--timing", cfg.timing, "real wall time in the millis column");

    auto* check = app.add_subcommand("check-certificate", "validate a user-supplied set");
    std::string check_graph, check_kind = "plain", check_set, check_pairs;
    check->add_option("--graph", check_graph, "edge list file")->required();
    check->add_option("--kind", check_kind, "plain, total, or paired")
        ->check(CLI::IsMember({"plain", "total", "paired"}));
    check->add_option("--set", check_set, "comma-separated vertex indices")->required();
    check->add_option("--pairs", check_pairs,
                      "explicit pairing a-b,c-d (paired kind; otherwise a matching is searched)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_graph, solve_kind, out);
        if (product->parsed()) return cmd_product(product_files, product_out, out);
        if (verify->parsed())
            return cmd_verify(verify_theorem, verify_files, verify_json, verify_vizing, out);
        if (sweep_cmd->parsed()) {
            for (const auto& name : sweep_families) cfg.families.push_back(family_from_name(name));
            return cmd_sweep(cfg, sweep_out, sweep_json_flag, out, err);
        }
        if (check->parsed()) return cmd_check(check_graph, check_kind, check_set, check_pairs, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace domlab::cli
