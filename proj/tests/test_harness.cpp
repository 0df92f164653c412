#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <vector>

#include "domlab/harness.hpp"
#include "test_util.hpp"

using namespace domlab;

namespace {

bool ledger_all_pass(const TheoremReport& rep) {
    bool ok = !rep.ledger.empty();
    for (const auto& f : rep.ledger) ok = ok && f.pass;
    return ok;
}

} // namespace

TEST_CASE("family generation produces the expected graphs") {
    const Graph p4 = generate_family({Family::path, 4, 0.5, 0, true});
    CHECK(p4.name() == "P4");
    CHECK(p4.edge_list() == std::vector<VertexPair>{{0, 1}, {1, 2}, {2, 3}});

    const Graph c4 = generate_family({Family::cycle, 4, 0.5, 0, true});
    CHECK(c4.name() == "C4");
    CHECK(c4.edge_list() == std::vector<VertexPair>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    const Graph k3 = generate_family({Family::complete, 3, 0.5, 0, true});
    CHECK(k3.edge_count() == 3);

    const Graph s4 = generate_family({Family::star, 4, 0.5, 0, true});
    CHECK(s4.name() == "S4");
    CHECK(s4.edge_list() == std::vector<VertexPair>{{0, 1}, {0, 2}, {0, 3}});

    CHECK(FamilySpec{Family::path, 4}.label() == "P4");
    CHECK(FamilySpec{Family::cycle, 5}.label() == "C5");
    CHECK(FamilySpec{Family::complete, 3}.label() == "K3");
    CHECK(FamilySpec{Family::star, 6}.label() == "S6");
    CHECK(FamilySpec{Family::random_graph, 5, 0.5, 7}.label() == "R5_p50_s7");

    for (Family f : {Family::path, Family::cycle, Family::complete, Family::star,
                     Family::random_graph})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("petersen"), std::invalid_argument);

    CHECK_THROWS_AS(generate_family({Family::cycle, 2, 0.5, 0, true}), std::invalid_argument);
    CHECK_THROWS_AS(generate_family({Family::path, 1, 0.5, 0, true}), std::invalid_argument);
    const Graph lone = generate_family({Family::path, 1, 0.5, 0, false});
    CHECK(lone.order() == 1);
    CHECK(lone.edge_count() == 0);
}

TEST_CASE("random family is deterministic and respects the isolation guard") {
    const FamilySpec spec{Family::random_graph, 6, 0.3, 42, true};
    const Graph a = generate_family(spec);
    const Graph b = generate_family(spec);
    CHECK(a.edge_list() == b.edge_list());
    CHECK_FALSE(a.has_isolated_vertex());
    CHECK(a.name() == "R6_p30_s42");

    const Graph dense = generate_family({Family::random_graph, 5, 1.0, 1, true});
    CHECK(dense.edge_count() == 10);

    CHECK_THROWS_AS(generate_family({Family::random_graph, 4, 0.0, 1, true}),
                    std::runtime_error);
    const Graph sparse = generate_family({Family::random_graph, 3, 0.0, 1, false});
    CHECK(sparse.edge_count() == 0);
}

TEST_CASE("first inequality on the two by three grid") {
    const auto rep = run_theorem(1, {testutil::complete(2), testutil::path(3)});
    CHECK(rep.theorem_id == 1);
    CHECK(rep.factor_labels == std::vector<std::string>{"K2", "P3"});
    CHECK(rep.left == 2);
    CHECK(rep.right == 4);
    CHECK(rep.constant == 2);
    CHECK(rep.d_size == 2);
    CHECK(rep.slack == 0.5);
    CHECK(rep.claims_failed == 0);
    CHECK(rep.pass);
    CHECK(ledger_all_pass(rep));
    CHECK(rep.ledger.back().name == "inequality holds");
    CHECK(rep.wall_ms >= 0.0);
}

TEST_CASE("second inequality is tight on the doubled edge") {
    const auto rep = run_theorem(2, {testutil::complete(2), testutil::complete(2)});
    CHECK(rep.left == 4);
    CHECK(rep.right == 4);
    CHECK(rep.d_size == 2);
    CHECK(rep.slack == 1.0);
    CHECK(rep.pass);
    CHECK(ledger_all_pass(rep));
}

TEST_CASE("third inequality on the cube") {
    const Graph k2 = testutil::complete(2);
    const auto rep = run_theorem(3, {k2, k2, k2});
    CHECK(rep.left == 8);
    CHECK(rep.right == 12);
    CHECK(rep.constant == 3);
    CHECK(rep.d_size == 4);
    CHECK(rep.pass);
    CHECK(ledger_all_pass(rep));
}

TEST_CASE("fourth inequality on the doubled edge") {
    const Graph k2 = testutil::complete(2);
    const auto rep = run_theorem(4, {k2, k2});
    CHECK(rep.left == 4);
    CHECK(rep.right == 12);
    CHECK(rep.constant == 6);
    CHECK(rep.d_size == 2);
    CHECK(rep.pass);
    CHECK(ledger_all_pass(rep));
}

TEST_CASE("fifth inequality on the doubled edge") {
    const Graph k2 = testutil::complete(2);
    const auto rep = run_theorem(5, {k2, k2});
    CHECK(rep.left == 4);
    CHECK(rep.right == 12);
    CHECK(rep.constant == 6);
    CHECK(rep.d_size == 2);
    CHECK(rep.pass);
    CHECK(ledger_all_pass(rep));
}

TEST_CASE("run_theorem validates its inputs") {
    const Graph k2 = testutil::complete(2);
    CHECK_THROWS_AS(run_theorem(0, {k2, k2}), std::invalid_argument);
    CHECK_THROWS_AS(run_theorem(6, {k2, k2}), std::invalid_argument);
    CHECK_THROWS_AS(run_theorem(1, {k2, k2, k2}), std::invalid_argument);
    CHECK_THROWS_AS(run_theorem(3, {k2}), std::invalid_argument);
    CHECK_THROWS_AS(run_theorem(2, {k2, Graph(3, std::vector<VertexPair>{{0, 1}})}),
                    std::domain_error);

    const Graph anon(2, std::vector<VertexPair>{{0, 1}});
    const auto rep = run_theorem(2, {anon, anon});
    CHECK(rep.factor_labels == std::vector<std::string>{"G1", "G2"});
}

TEST_CASE("the vizing-style comparison is informational only") {
    const Graph k2 = testutil::complete(2);
    const auto rep = run_theorem(2, {k2, k2}, true);
    bool found = false;
    for (const auto& f : rep.ledger)
        if (f.name == "vizing-style comparison (informational)") {
            found = true;
            CHECK(f.pass);
            CHECK(f.detail == "1*1 = 1 <= 2");
        }
    CHECK(found);
    CHECK(rep.pass);
}

TEST_CASE("sweep pool enumerates families in deterministic order") {
    SweepConfig cfg;
    cfg.families = {Family::path, Family::cycle};
    cfg.max_factor_order = 4;
    const auto pool = sweep_pool(cfg);
    std::vector<std::string> labels;
    for (const auto& s : pool) labels.push_back(s.label());
    CHECK(labels == std::vector<std::string>{"P2", "P3", "P4", "C3", "C4"});

    cfg.random_count = 2;
    cfg.seed = 9;
    const auto with_random = sweep_pool(cfg);
    REQUIRE(with_random.size() == 7);
    CHECK(with_random[5].label() == "R2_p50_s9");
    CHECK(with_random[6].label() == "R3_p50_s10");

    SweepConfig ronly;
    ronly.families = {Family::random_graph};
    ronly.max_factor_order = 5;
    const auto randoms = sweep_pool(ronly);
    CHECK(randoms.size() == 4);
    for (const auto& s : randoms) CHECK(s.family == Family::random_graph);
}

TEST_CASE("sweep walks factor multisets in pool order") {
    SweepConfig cfg;
    cfg.theorem_id = 2;
    cfg.families = {Family::path};
    cfg.max_factor_order = 3;
    const auto reports = sweep(cfg);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].factor_labels == std::vector<std::string>{"P2", "P2"});
    CHECK(reports[1].factor_labels == std::vector<std::string>{"P2", "P3"});
    CHECK(reports[2].factor_labels == std::vector<std::string>{"P3", "P3"});
    for (const auto& r : reports) CHECK(r.pass);

    cfg.max_product_order = 4;
    const auto capped = sweep(cfg);
    REQUIRE(capped.size() == 1);
    CHECK(capped[0].factor_labels == std::vector<std::string>{"P2", "P2"});

    cfg.max_product_order = 0;
    cfg.factor_count = 3;
    CHECK_THROWS_AS(sweep(cfg), std::invalid_argument);
    cfg.theorem_id = 3;
    cfg.factor_count = 1;
    CHECK_THROWS_AS(sweep(cfg), std::invalid_argument);
}

TEST_CASE("sweeps are byte-identical across job counts") {
    SweepConfig cfg;
    cfg.theorem_id = 2;
    cfg.families = {Family::path, Family::star};
    cfg.max_factor_order = 4;

    std::ostringstream one;
    sweep_csv(sweep(cfg), one, cfg.timing);

    cfg.jobs = 4;
    std::ostringstream four;
    sweep_csv(sweep(cfg), four, cfg.timing);
    CHECK(one.str() == four.str());
    CHECK(one.str().find("P2 x P2") != std::string::npos);
}

TEST_CASE("csv rows freeze the report fields") {
    const Graph k2 = testutil::complete(2);
    const std::vector<TheoremReport> reports{run_theorem(2, {k2, k2})};
    std::ostringstream out;
    sweep_csv(reports, out, false);
    CHECK(out.str() ==
          "theorem,factors,left,right,constant,D_size,slack,pass,claims_failed,millis\n"
          "2,K2 x K2,4,4,2,2,1.000000,1,0,0\n");

    std::ostringstream empty;
    sweep_csv({}, empty, false);
    CHECK(empty.str() ==
          "theorem,factors,left,right,constant,D_size,slack,pass,claims_failed,millis\n");
}

TEST_CASE("summaries aggregate pass and slack") {
    TheoremReport a;
    a.slack = 0.5;
    a.pass = true;
    TheoremReport b;
    b.slack = 1.0;
    b.pass = false;
    const auto s = summarize({a, b});
    CHECK(s.rows == 2);
    CHECK(s.failures == 1);
    CHECK(s.min_slack == 0.5);
    CHECK(s.mean_slack == 0.75);

    const auto zero = summarize({});
    CHECK(zero.rows == 0);
    CHECK(zero.failures == 0);
    CHECK(zero.min_slack == 0.0);
    CHECK(zero.mean_slack == 0.0);
}

TEST_CASE("reports serialize to json") {
    const Graph k2 = testutil::complete(2);
    const auto rep = run_theorem(2, {k2, k2});
    const auto j = nlohmann::json::parse(report_json(rep));
    CHECK(j["theorem"] == 2);
    CHECK(j["factors"][0] == "K2");
    CHECK(j["left"] == 4);
    CHECK(j["right"] == 4);
    CHECK(j["slack"] == 1.0);
    CHECK(j["pass"] == true);
    CHECK(j["ledger"].is_array());
    CHECK_FALSE(j["ledger"].empty());

    const auto arr = nlohmann::json::parse(sweep_json({rep, rep}));
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 2);
    CHECK(arr[1]["pass"] == true);
}
