#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "domlab/graph.hpp"
#include "domlab/machinery.hpp"

namespace domlab {

enum class Family { path, cycle, complete, star, random_graph };

const char* family_name(Family f);
Family family_from_name(const std::string& name); // throws on unknown names

struct FamilySpec {
    Family family = Family::path;
    int order = 2;
    double edge_probability = 0.5; // random family only
    std::uint64_t seed = 0;        // random family only
    bool require_no_isolated = true;

    std::string label() const; // P4, C5, K3, S6, R5_p50_s7
};

// Deterministic construction; the random family redraws a bounded number of
// times when an isolated vertex is forbidden and throws if none succeeds.
Graph generate_family(const FamilySpec& spec);

struct TheoremReport {
    int theorem_id = 0;
    std::vector<std::string> factor_labels;
    long long left = 0;     // product-of-numbers side
    long long right = 0;    // constant times the product invariant
    long long constant = 0;
    long long d_size = 0;   // size of the product certificate behind `right`
    double slack = 0.0;     // ratio left/right; 1.0 means the bound is tight
    bool pass = false;      // inequality holds and every ledger fact passed
    int claims_failed = 0;
    std::vector<LedgerFact> ledger;
    double wall_ms = 0.0;
};

// Solve the factor and product instances for one inequality (ids 1..5) and
// verify the full double-counting ledger. `vizing` appends an informational
// comparison of gamma(product) against the product of factor gammas.
TheoremReport run_theorem(int theorem_id, const std::vector<Graph>& factors, bool vizing = false);

struct SweepConfig {
    int theorem_id = 1;
    std::vector<Family> families; // empty -> path, cycle, complete, star
    int max_factor_order = 5;
    int max_product_order = 0;    // 0 -> 30 for ids 1..3, 24 for 4 and 5
    int factor_count = 0;         // 0 -> 2 for ids 1, 2, 4 and 3 for ids 3, 5
    int random_count = 0;         // random factors appended to the pool
    double edge_probability = 0.5;
    std::uint64_t seed = 1;
    int jobs = 1;
    bool vizing = false;
    bool timing = false;          // real millis in the CSV instead of 0
};

// Factor pool the sweep draws from, in deterministic order.
std::vector<FamilySpec> sweep_pool(const SweepConfig& cfg);

// Reports for every multiset of pool factors whose product order fits the
// cap, ordered by pool index tuple regardless of job count.
std::vector<TheoremReport> sweep(const SweepConfig& cfg);

struct SweepSummary {
    int rows = 0;
    int failures = 0;
    double min_slack = 0.0;  // smallest positive slack ratio
    double mean_slack = 0.0;
};

SweepSummary summarize(const std::vector<TheoremReport>& reports);

// theorem,factors,left,right,constant,D_size,slack,pass,claims_failed,millis
void sweep_csv(const std::vector<TheoremReport>& reports, std::ostream& out, bool timing);

std::string report_json(const TheoremReport& report);
std::string sweep_json(const std::vector<TheoremReport>& reports);

} // namespace domlab
