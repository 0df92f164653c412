#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domlab/domination.hpp"
#include "domlab/grid.hpp"
#include "domlab/partition.hpp"
#include "domlab/product.hpp"

namespace domlab {

// One checked fact in a verification run.
struct LedgerFact {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Entry rules for the condition matrix F over a product and a vertex set D:
//   membership_or_axis: F(u) = 1 iff u in D or u has a last-axis neighbor in D
//   axis_only:          F(u) = 1 iff u has a last-axis neighbor in D
//   min_axis:           F(u) = lowest 1-based axis along which u has a neighbor in D
//   per_axis_family:    one grid per axis i: F_i(u) = i+1 if u in D, else the min_axis value
enum class ConditionVariant { membership_or_axis, axis_only, min_axis, per_axis_family };

struct ConditionMatrix {
    ConditionVariant variant = ConditionVariant::membership_or_axis;
    int axes = 0;
    std::vector<int> entries;              // per product vertex; unused for per_axis_family
    std::vector<std::vector<int>> family;  // per_axis_family: [axis][vertex], values 1-based
};

ConditionMatrix build_condition_matrix(const ProductGraph& p, const Bitset& dom,
                                       ConditionVariant variant);

// One partition per product axis; cells are tuples of block indices, encoded
// mixed-radix with the last axis fastest (mirroring product vertex encoding).
struct BlockGrid {
    std::vector<Partition> parts;
    std::vector<int> counts;

    int axes() const { return static_cast<int>(parts.size()); }
    long long cell_count() const;
    long long cell_index(std::span<const int> cell) const;
    std::vector<int> cell_tuple(long long index) const;
};

BlockGrid make_block_grid(std::vector<Partition> parts);

// Condition submatrix over one block-grid cell; dims follow the block sizes.
// For per_axis_family matrices pass the source axis, otherwise -1.
Grid cell_subgrid(const ProductGraph& p, const ConditionMatrix& f, const BlockGrid& bg,
                  std::span<const int> cell, int family_axis = -1);

// Slab decomposition of D: one vertex set per block profile over `key_axes`.
// With a pairing supplied, each slab is additionally split by the axis of the
// member's matching edge.
struct SlabSets {
    std::vector<int> key_axes;
    std::vector<int> key_counts;
    std::vector<Bitset> z;                            // indexed by slab key
    std::vector<std::vector<Bitset>> z_by_match_axis; // [slab][axis]

    long long slab_count() const { return static_cast<long long>(z.size()); }
    long long key_index(std::span<const int> key) const;
};

SlabSets slab_sets(const ProductGraph& p, const Bitset& dom, const BlockGrid& bg,
                   std::span<const int> key_axes,
                   const std::vector<VertexPair>* pairing = nullptr);

// Two-factor cell classification with the usual vacuous readings for empty blocks.
struct TwoFactorCells {
    std::vector<std::vector<BinaryCellClass>> cls; // [g_block][h_block]
    std::vector<std::vector<int>> s_per_g;          // qualifying h-blocks per g-block (columns covered)
    std::vector<std::vector<int>> s_per_h;          // qualifying g-blocks per h-block (rows gapped)
    long long d_h = 0, d_g = 0;
    std::vector<std::pair<int, int>> uncovered;     // cells satisfying neither condition
};

TwoFactorCells classify_cells(const ProductGraph& p, const ConditionMatrix& f, const BlockGrid& bg);

// Does the projection of z onto `axis` dominate the given block of that factor?
// With require_nonself every block vertex needs a proper neighbor in the projection.
bool block_dominated_by_projection(const ProductGraph& p, const BlockGrid& bg, const Bitset& z,
                                   int axis, int block, bool require_nonself);

// Projection of a slab completed with the unqualifying representatives;
// dominating whenever the qualifying blocks came from columns-covered cells.
struct PlainCompletion {
    Bitset projection;
    Bitset completed;
    bool dominating = false;
    bool parts_disjoint = false;
    bool bound_ok = false; // |S| <= |projection| <= |Z|
    int s_count = 0, z_count = 0;
};

PlainCompletion completed_dominating_set(const ProductGraph& p, const BlockGrid& bg,
                                         int target_axis, const Bitset& z_slab,
                                         const std::vector<int>& qualifying);

// Total-domination variant: representatives already hit by the projection are
// folded into the qualifying index set before completing.
struct TotalCompletion {
    Bitset projection;
    Bitset completed;
    bool total_dominating = false;
    bool minimality_ok = false; // |completed| >= block count of the target partition
    bool chain_ok = false;      // s <= l <= |projection| <= |Z|
    int s_count = 0, l_count = 0, proj_count = 0, z_count = 0;
};

TotalCompletion completed_total_dominating_set(const ProductGraph& p, const BlockGrid& bg,
                                               int target_axis, const Bitset& z_slab,
                                               const std::vector<int>& qualifying);

// Recursive pair completion on a factor graph h. Inputs: a (members whose
// matching edge collapsed under projection), b (members whose matching edge
// survived), c (representative pairs of unqualified blocks, given in pairs_c).
// pairs_b carries the surviving edges as projected onto h; the maximal
// matching on b seeds from them before the greedy fill, which is what keeps
// |M1| + 2|M2| within |C| plus the member count behind b. Overlapping or
// repeated pairs_b entries are allowed and skipped once an endpoint is taken.
struct PairCompletionResult {
    std::vector<VertexPair> matching; // final M, a perfect matching on e_rec
    Bitset m1, m2;                    // frozen after the initial matching step
    Bitset e_rec;
    bool paired_dominating = false;
    bool size_bound_ok = false;       // |E_rec| <= 2|A| + |M1| + 2|M2|
    bool defensive_fired = false;     // a removal broke domination of a former charge
    std::string defensive_detail;
};

PairCompletionResult pair_completion(const Graph& h, const Bitset& a, const Bitset& b,
                                     const Bitset& c, const std::vector<VertexPair>& pairs_c,
                                     const std::vector<VertexPair>& pairs_b = {});

// Fully assembled verification context for the two-factor inequalities.
struct TwoFactorInstance {
    ProductGraph product;
    BlockGrid grid;
    DominationCertificate dom;
    ConditionMatrix cond;
    TwoFactorCells cells;
    SlabSets slabs_g; // keyed by axis-0 blocks
    SlabSets slabs_h; // keyed by axis-1 blocks
};

TwoFactorInstance build_two_factor_instance(ProductGraph product, Partition g_part,
                                            Partition h_part, DominationCertificate prod_cert,
                                            ConditionVariant variant);

// Context for the n-factor inequalities (min_axis or per_axis_family).
struct NFactorInstance {
    ProductGraph product;
    BlockGrid grid;
    DominationCertificate dom;
    ConditionMatrix cond;
    // complete axes per block-grid cell; min_axis: [cell], family: [axis][cell]
    std::vector<std::vector<int>> complete_per_cell;
    std::vector<std::vector<std::vector<int>>> complete_per_cell_family;
    std::vector<SlabSets> slabs_excluding; // [axis] -> slabs keyed by every other axis
};

NFactorInstance build_n_factor_instance(ProductGraph product, std::vector<Partition> parts,
                                        DominationCertificate prod_cert, ConditionVariant variant);

// Scenario record for pair completions harvested from verification runs.
struct PairCompletionScenario {
    Graph factor;
    Bitset a, b, c;
    std::vector<VertexPair> pairs_c;
    std::vector<VertexPair> pairs_b;
};

// Double-counting verification. Walks the full ledger for one inequality and
// reports every checked fact; `theorem` selects among ids 1..5.
struct DoubleCountResult {
    long long cell_product = 0; // number of block-grid cells
    long long tally = 0;        // d_H + d_G, or the sum over axes of the per-axis tallies
    long long d_h = 0, d_g = 0;
    std::vector<LedgerFact> facts;
    bool all_pass = true;
    std::vector<PairCompletionScenario> completions; // theorems 4 and 5
};

DoubleCountResult double_count(const TwoFactorInstance& inst, int theorem);
DoubleCountResult double_count(const NFactorInstance& inst, int theorem);

} // namespace domlab
