#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>
#include <vector>

#include "domlab/machinery.hpp"
#include "test_util.hpp"

using namespace domlab;

namespace {

DominationCertificate cert(DominationKind kind, int order, std::initializer_list<int> members,
                           std::vector<VertexPair> pairing = {}) {
    DominationCertificate c;
    c.kind = kind;
    c.members = Bitset::of(order, members);
    c.pairing = std::move(pairing);
    return c;
}

// K2 x K2: a four cycle 0-1-3-2-0 with axis-0 edges (0,2),(1,3)
TwoFactorInstance doubled_edge_instance(ConditionVariant variant, DominationKind prod_kind) {
    const Graph k2 = testutil::complete(2);
    ProductGraph prod = cartesian_product({k2, k2});
    const auto factor_cert = prod_kind == DominationKind::paired
                                 ? domination_number(k2, DominationKind::paired).certificate
                                 : domination_number(k2, DominationKind::total).certificate;
    const PartitionMode mode =
        prod_kind == DominationKind::paired ? PartitionMode::paired : PartitionMode::open;
    Partition pg = build_partition(k2, factor_cert, mode);
    Partition ph = build_partition(k2, factor_cert, mode);
    auto prod_cert = domination_number(prod.graph(), prod_kind).certificate;
    return build_two_factor_instance(std::move(prod), std::move(pg), std::move(ph),
                                     std::move(prod_cert), variant);
}

void check_all_facts(const DoubleCountResult& r) {
    CHECK_FALSE(r.facts.empty());
    for (const auto& f : r.facts) {
        CAPTURE(f.name);
        CAPTURE(f.detail);
        CHECK(f.pass);
    }
    CHECK(r.all_pass);
}

} // namespace

TEST_CASE("partition assignment follows the lowest-index rule") {
    const Graph p4 = testutil::path(4);
    const auto open4 = build_partition(p4, cert(DominationKind::total, 4, {1, 2}),
                                       PartitionMode::open);
    CHECK(open4.mode == PartitionMode::open);
    CHECK(open4.blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    CHECK(open4.singles == std::vector<int>{1, 2});
    for (int b = 0; b < open4.block_count(); ++b)
        for (int v : open4.blocks[static_cast<std::size_t>(b)])
            CHECK(open4.block_of[static_cast<std::size_t>(v)] == b);

    const Graph k2 = testutil::complete(2);
    const auto open2 = build_partition(k2, cert(DominationKind::total, 2, {0, 1}),
                                       PartitionMode::open);
    CHECK(open2.blocks == std::vector<std::vector<int>>{{1}, {0}});

    const Graph p3 = testutil::path(3);
    const auto closed = build_partition(p3, cert(DominationKind::plain, 3, {1}),
                                        PartitionMode::closed);
    CHECK(closed.blocks == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(closed.singles == std::vector<int>{1});

    const auto paired = build_partition(
        p4, cert(DominationKind::paired, 4, {1, 2}, {{1, 2}}), PartitionMode::paired);
    CHECK(paired.blocks == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(paired.pairs == std::vector<VertexPair>{{1, 2}});
}

TEST_CASE("partition rejects mismatched or invalid certificates") {
    const Graph p4 = testutil::path(4);
    CHECK_THROWS_AS(build_partition(p4, cert(DominationKind::plain, 4, {0, 2}),
                                    PartitionMode::open),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_partition(p4, cert(DominationKind::total, 4, {1, 2}),
                                    PartitionMode::paired),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_partition(p4, cert(DominationKind::plain, 4, {0}),
                                    PartitionMode::closed),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_partition(p4, cert(DominationKind::paired, 4, {1, 2}),
                                    PartitionMode::paired),
                    std::invalid_argument);
}

TEST_CASE("condition matrices on the doubled edge") {
    const Graph k2 = testutil::complete(2);
    const ProductGraph prod = cartesian_product({k2, k2});
    const Bitset d = Bitset::of(4, {0, 1});

    const auto axis = build_condition_matrix(prod, d, ConditionVariant::axis_only);
    CHECK(axis.entries == std::vector<int>{1, 1, 0, 0});

    const auto mem = build_condition_matrix(prod, d, ConditionVariant::membership_or_axis);
    CHECK(mem.entries == std::vector<int>{1, 1, 0, 0});

    const auto mins = build_condition_matrix(prod, d, ConditionVariant::min_axis);
    CHECK(mins.entries == std::vector<int>{2, 2, 1, 1});

    const auto fam = build_condition_matrix(prod, d, ConditionVariant::per_axis_family);
    REQUIRE(fam.family.size() == 2);
    CHECK(fam.family[0] == std::vector<int>{1, 1, 1, 1});
    CHECK(fam.family[1] == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("condition matrices validate the set") {
    const Graph k2 = testutil::complete(2);
    const ProductGraph prod = cartesian_product({k2, k2});
    // {0,3} dominates but is not total dominating
    CHECK_THROWS_AS(build_condition_matrix(prod, Bitset::of(4, {0, 3}),
                                           ConditionVariant::axis_only),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_condition_matrix(prod, Bitset::of(4, {0, 3}),
                                           ConditionVariant::min_axis),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_condition_matrix(prod, Bitset::of(4, {0}),
                                           ConditionVariant::membership_or_axis),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_condition_matrix(prod, Bitset::of(3, {0, 1}),
                                           ConditionVariant::axis_only),
                    std::invalid_argument);
}

TEST_CASE("block grid cells encode mixed radix, last axis fastest") {
    const Graph k2 = testutil::complete(2);
    const auto gt = domination_number(k2, DominationKind::total).certificate;
    std::vector<Partition> parts;
    for (int i = 0; i < 3; ++i) parts.push_back(build_partition(k2, gt, PartitionMode::open));
    const BlockGrid bg = make_block_grid(std::move(parts));
    CHECK(bg.axes() == 3);
    CHECK(bg.counts == std::vector<int>{2, 2, 2});
    CHECK(bg.cell_count() == 8);
    const int cell[3] = {1, 0, 1};
    CHECK(bg.cell_index(cell) == 5);
    CHECK(bg.cell_tuple(5) == std::vector<int>{1, 0, 1});
    const int bad[3] = {2, 0, 0};
    CHECK_THROWS_AS(bg.cell_index(bad), std::out_of_range);
    const int short_cell[2] = {0, 0};
    CHECK_THROWS_AS(bg.cell_index(short_cell), std::invalid_argument);
}

TEST_CASE("cell subgrids take block-sized dims") {
    const auto inst = doubled_edge_instance(ConditionVariant::membership_or_axis,
                                            DominationKind::paired);
    const int cell[2] = {0, 0};
    const Grid sub = cell_subgrid(inst.product, inst.cond, inst.grid, cell);
    CHECK(sub.dims == std::vector<int>{2, 2});
    CHECK(sub.values == std::vector<int>{1, 1, 0, 0});

    const auto fam = build_condition_matrix(inst.product, inst.dom.members,
                                            ConditionVariant::per_axis_family);
    const Grid f2 = cell_subgrid(inst.product, fam, inst.grid, cell, 1);
    CHECK(f2.values == std::vector<int>{2, 2, 1, 1});
    CHECK_THROWS_AS(cell_subgrid(inst.product, fam, inst.grid, cell), std::invalid_argument);
    CHECK_THROWS_AS(cell_subgrid(inst.product, inst.cond, inst.grid, cell, 0),
                    std::invalid_argument);
}

TEST_CASE("slab sets split the certificate by block profile") {
    const auto inst = doubled_edge_instance(ConditionVariant::axis_only, DominationKind::total);
    CHECK(inst.slabs_g.key_axes == std::vector<int>{0});
    CHECK(inst.slabs_g.slab_count() == 2);
    CHECK(inst.slabs_g.z[0].none());
    CHECK(inst.slabs_g.z[1] == Bitset::of(4, {0, 1}));
    CHECK(inst.slabs_h.z[0] == Bitset::of(4, {1}));
    CHECK(inst.slabs_h.z[1] == Bitset::of(4, {0}));

    const int key1[1] = {1};
    CHECK(inst.slabs_g.key_index(key1) == 1);
    const int bad[1] = {5};
    CHECK_THROWS_AS(inst.slabs_g.key_index(bad), std::out_of_range);
    const int wide[2] = {0, 0};
    CHECK_THROWS_AS(inst.slabs_g.key_index(wide), std::invalid_argument);

    const int axis_g[1] = {0};
    const auto empty = slab_sets(inst.product, Bitset(4), inst.grid, axis_g);
    for (const auto& z : empty.z) CHECK(z.none());

    CHECK_THROWS_AS(slab_sets(inst.product, Bitset(5), inst.grid, axis_g),
                    std::invalid_argument);
}

TEST_CASE("paired slab sets split members by matching-edge axis") {
    const auto inst = doubled_edge_instance(ConditionVariant::membership_or_axis,
                                            DominationKind::paired);
    REQUIRE(inst.slabs_g.slab_count() == 1);
    REQUIRE(inst.slabs_g.z_by_match_axis.size() == 1);
    CHECK(inst.slabs_g.z_by_match_axis[0][0].none());
    CHECK(inst.slabs_g.z_by_match_axis[0][1] == Bitset::of(4, {0, 1}));

    const int axis_g[1] = {0};
    const std::vector<VertexPair> empty_pairing;
    CHECK_THROWS_AS(slab_sets(inst.product, inst.dom.members, inst.grid, axis_g, &empty_pairing),
                    std::invalid_argument);
}

TEST_CASE("cell classification on the doubled edge") {
    const auto inst = doubled_edge_instance(ConditionVariant::axis_only, DominationKind::total);
    CHECK_FALSE(inst.cells.cls[0][0].columns_covered);
    CHECK(inst.cells.cls[0][0].rows_gapped);
    CHECK_FALSE(inst.cells.cls[0][1].columns_covered);
    CHECK(inst.cells.cls[0][1].rows_gapped);
    CHECK(inst.cells.cls[1][0].columns_covered);
    CHECK_FALSE(inst.cells.cls[1][0].rows_gapped);
    CHECK(inst.cells.cls[1][1].columns_covered);
    CHECK_FALSE(inst.cells.cls[1][1].rows_gapped);
    CHECK(inst.cells.s_per_g == std::vector<std::vector<int>>{{}, {0, 1}});
    CHECK(inst.cells.s_per_h == std::vector<std::vector<int>>{{0}, {0}});
    CHECK(inst.cells.d_h == 2);
    CHECK(inst.cells.d_g == 2);
    CHECK(inst.cells.uncovered.empty());
}

TEST_CASE("empty blocks classify vacuously") {
    const Graph k2 = testutil::complete(2);
    const ProductGraph prod = cartesian_product({k2, k2});
    const auto f = build_condition_matrix(prod, Bitset::of(4, {0, 1}),
                                          ConditionVariant::axis_only);
    Partition forged;
    forged.mode = PartitionMode::open;
    forged.blocks = {{0, 1}, {}};
    forged.block_of = {0, 0};
    forged.singles = {0, 1};
    const BlockGrid bg = make_block_grid({forged, forged});

    const int empty_cell[2] = {1, 0};
    CHECK(cell_subgrid(prod, f, bg, empty_cell).cell_total() == 0);

    const auto cells = classify_cells(prod, f, bg);
    CHECK(cells.cls[0][0].columns_covered);
    CHECK_FALSE(cells.cls[0][0].rows_gapped);
    CHECK(cells.cls[0][1].columns_covered);  // zero columns
    CHECK_FALSE(cells.cls[0][1].rows_gapped);
    CHECK_FALSE(cells.cls[1][0].columns_covered); // zero rows
    CHECK(cells.cls[1][0].rows_gapped);
    CHECK(cells.cls[1][1].columns_covered); // zero rows and columns
    CHECK(cells.cls[1][1].rows_gapped);
    CHECK(cells.uncovered.empty());
    CHECK(cells.d_h == 3);
    CHECK(cells.d_g == 2);
}

TEST_CASE("projection domination checks") {
    const auto inst = doubled_edge_instance(ConditionVariant::axis_only, DominationKind::total);
    CHECK(block_dominated_by_projection(inst.product, inst.grid, inst.slabs_g.z[1], 1, 0, false));
    CHECK(block_dominated_by_projection(inst.product, inst.grid, inst.slabs_g.z[1], 1, 1, false));
    CHECK(block_dominated_by_projection(inst.product, inst.grid, inst.slabs_h.z[0], 0, 0, true));
    CHECK(block_dominated_by_projection(inst.product, inst.grid, inst.slabs_h.z[1], 0, 0, true));
    // empty slab cannot dominate a nonempty block
    CHECK_FALSE(
        block_dominated_by_projection(inst.product, inst.grid, inst.slabs_g.z[0], 1, 0, false));
}

TEST_CASE("plain completion covers the factor") {
    const auto inst = doubled_edge_instance(ConditionVariant::axis_only, DominationKind::total);
    const auto full = completed_dominating_set(inst.product, inst.grid, 1, inst.slabs_g.z[1],
                                               {0, 1});
    CHECK(full.completed == Bitset::of(2, {0, 1}));
    CHECK(full.dominating);
    CHECK(full.parts_disjoint);
    CHECK(full.bound_ok);
    CHECK(full.s_count == 2);
    CHECK(full.z_count == 2);

    // empty slab: the completion is the representatives alone
    const auto reps = completed_dominating_set(inst.product, inst.grid, 1, inst.slabs_g.z[0], {});
    CHECK(reps.projection.none());
    CHECK(reps.completed == Bitset::of(2, {0, 1}));
    CHECK(reps.dominating);
    CHECK(reps.bound_ok);

    const auto paired = doubled_edge_instance(ConditionVariant::membership_or_axis,
                                              DominationKind::paired);
    CHECK_THROWS_AS(completed_dominating_set(paired.product, paired.grid, 1, paired.slabs_g.z[0],
                                             {}),
                    std::invalid_argument);
}

TEST_CASE("total completion covers the factor") {
    const auto inst = doubled_edge_instance(ConditionVariant::axis_only, DominationKind::total);
    const auto comp = completed_total_dominating_set(inst.product, inst.grid, 0,
                                                     inst.slabs_h.z[0], {0});
    CHECK(comp.completed == Bitset::of(2, {0, 1}));
    CHECK(comp.total_dominating);
    CHECK(comp.minimality_ok);
    CHECK(comp.chain_ok);
    CHECK(comp.s_count == 1);
    CHECK(comp.l_count == 1);
    CHECK(comp.proj_count == 1);
    CHECK(comp.z_count == 1);

    const Graph k2 = testutil::complete(2);
    const Graph p3 = testutil::path(3);
    ProductGraph prod = cartesian_product({k2, p3});
    Partition pg = build_partition(k2, cert(DominationKind::total, 2, {0, 1}),
                                   PartitionMode::open);
    Partition ph = build_partition(p3, cert(DominationKind::plain, 3, {1}),
                                   PartitionMode::closed);
    const auto mixed = build_two_factor_instance(std::move(prod), std::move(pg), std::move(ph),
                                                 cert(DominationKind::plain, 6, {0, 5}),
                                                 ConditionVariant::membership_or_axis);
    CHECK_THROWS_AS(completed_total_dominating_set(mixed.product, mixed.grid, 1,
                                                   mixed.slabs_g.z[0], {}),
                    std::invalid_argument);
}

TEST_CASE("pair completion follows the recursive procedure") {
    const Graph k2 = testutil::complete(2);
    const auto trivial = pair_completion(k2, Bitset(2), Bitset(2), Bitset::of(2, {0, 1}),
                                         {{0, 1}});
    CHECK(trivial.e_rec == Bitset::of(2, {0, 1}));
    CHECK(trivial.m1 == Bitset::of(2, {0, 1}));
    CHECK(trivial.m2.none());
    CHECK(trivial.matching == std::vector<VertexPair>{{0, 1}});
    CHECK(trivial.paired_dominating);
    CHECK(trivial.size_bound_ok);
    CHECK_FALSE(trivial.defensive_fired);

    // unmatched member of A adopts its lowest unmatched neighbor
    const Graph p4 = testutil::path(4);
    const auto adopt = pair_completion(p4, Bitset::of(4, {1}), Bitset(4), Bitset::of(4, {2, 3}),
                                       {{2, 3}});
    CHECK(adopt.e_rec == Bitset::of(4, {0, 1, 2, 3}));
    CHECK(adopt.m1 == Bitset::of(4, {2, 3}));
    CHECK(adopt.m2.none());
    CHECK(adopt.matching == std::vector<VertexPair>{{0, 1}, {2, 3}});
    CHECK(adopt.paired_dominating);
    CHECK(adopt.size_bound_ok);
    CHECK_FALSE(adopt.defensive_fired);

    // a lone B vertex stays in M2 and adopts outward
    const Graph p3 = testutil::path(3);
    const auto lone = pair_completion(p3, Bitset(3), Bitset::of(3, {1}), Bitset(3), {});
    CHECK(lone.e_rec == Bitset::of(3, {0, 1}));
    CHECK(lone.m1.none());
    CHECK(lone.m2 == Bitset::of(3, {1}));
    CHECK(lone.matching == std::vector<VertexPair>{{0, 1}});
    CHECK(lone.paired_dominating);
    CHECK(lone.size_bound_ok);
    CHECK_FALSE(lone.defensive_fired);
}

TEST_CASE("pair completion seeds the matching from surviving pairs") {
    const Graph h(6, std::vector<VertexPair>{{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}, {4, 5}});
    const Bitset all = Bitset::of(6, {0, 1, 2, 3, 4, 5});
    const std::vector<VertexPair> survived{{0, 3}, {1, 2}, {4, 5}};

    // greedy alone crosses the pairs and strands half of B in M2
    const auto greedy = pair_completion(h, Bitset(6), all, Bitset(6), {});
    CHECK(greedy.matching == std::vector<VertexPair>{{0, 1}, {2, 4}});
    CHECK(greedy.m2 == Bitset::of(6, {3, 5}));
    CHECK(greedy.e_rec == Bitset::of(6, {0, 1, 2, 4}));
    CHECK(greedy.paired_dominating);

    // with the seeds the matching is the surviving pairing itself
    const auto seeded = pair_completion(h, Bitset(6), all, Bitset(6), {}, survived);
    CHECK(seeded.matching == survived);
    CHECK(seeded.m1 == all);
    CHECK(seeded.m2.none());
    CHECK(seeded.e_rec == all);
    CHECK(seeded.paired_dominating);
    CHECK(seeded.size_bound_ok);
    CHECK_FALSE(seeded.defensive_fired);

    // overlapping seeds: the first normalized pair wins, the loser re-enters
    // the greedy phase
    const auto overlap = pair_completion(h, Bitset(6), Bitset::of(6, {0, 1, 3}), Bitset(6), {},
                                         {{0, 3}, {0, 1}});
    CHECK(overlap.matching == std::vector<VertexPair>{{0, 1}, {3, 4}});
    CHECK(overlap.m1 == Bitset::of(6, {0, 1}));
    CHECK(overlap.m2 == Bitset::of(6, {3}));
    CHECK(overlap.e_rec == Bitset::of(6, {0, 1, 3, 4}));
    CHECK(overlap.paired_dominating);

    // seeds must be edges with both endpoints inside b
    CHECK_THROWS_AS(pair_completion(h, Bitset(6), all, Bitset(6), {}, {{0, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        pair_completion(h, Bitset(6), Bitset::of(6, {0, 1}), Bitset(6), {}, {{0, 3}}),
        std::invalid_argument);
}

TEST_CASE("pair completion validates its inputs") {
    const Graph p4 = testutil::path(4);
    CHECK_THROWS_AS(pair_completion(p4, Bitset(4), Bitset(4), Bitset::of(4, {0, 3}), {{0, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pair_completion(p4, Bitset(4), Bitset(4), Bitset::of(4, {0, 1, 2}),
                                    {{0, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pair_completion(p4, Bitset(4), Bitset(4), Bitset::of(4, {0, 1, 2}),
                                    {{0, 1}, {1, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pair_completion(p4, Bitset(3), Bitset(4), Bitset(4), {}),
                    std::invalid_argument);

    const Graph lonely(3, std::vector<VertexPair>{{0, 1}});
    CHECK_THROWS_AS(pair_completion(lonely, Bitset(3), Bitset(3), Bitset(3), {}),
                    std::domain_error);
}

TEST_CASE("two-factor instance construction validates") {
    const Graph k2 = testutil::complete(2);
    const auto gt = domination_number(k2, DominationKind::total).certificate;
    const Partition open2 = build_partition(k2, gt, PartitionMode::open);

    CHECK_THROWS_AS(build_two_factor_instance(cartesian_product({k2, k2, k2}), open2, open2,
                                              cert(DominationKind::total, 8, {0, 1, 6, 7}),
                                              ConditionVariant::axis_only),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_two_factor_instance(cartesian_product({k2, k2}), open2, open2,
                                              cert(DominationKind::total, 4, {0, 1}),
                                              ConditionVariant::min_axis),
                    std::invalid_argument);

    const Graph p4 = testutil::path(4);
    const Partition wide = build_partition(p4, cert(DominationKind::total, 4, {1, 2}),
                                           PartitionMode::open);
    CHECK_THROWS_AS(build_two_factor_instance(cartesian_product({k2, k2}), wide, open2,
                                              cert(DominationKind::total, 4, {0, 1}),
                                              ConditionVariant::axis_only),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_two_factor_instance(cartesian_product({k2, k2}), open2, open2,
                                              cert(DominationKind::total, 4, {0}),
                                              ConditionVariant::axis_only),
                    std::invalid_argument);
}

TEST_CASE("n-factor instance construction validates") {
    const Graph k2 = testutil::complete(2);
    const auto gt = domination_number(k2, DominationKind::total).certificate;
    const Partition open2 = build_partition(k2, gt, PartitionMode::open);

    CHECK_THROWS_AS(build_n_factor_instance(cartesian_product({k2, k2}), {open2, open2},
                                            cert(DominationKind::total, 4, {0, 1}),
                                            ConditionVariant::axis_only),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_n_factor_instance(cartesian_product({k2, k2, k2}), {open2, open2},
                                            cert(DominationKind::total, 8, {0, 1, 6, 7}),
                                            ConditionVariant::min_axis),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_n_factor_instance(cartesian_product({k2, k2}), {open2, open2},
                                            cert(DominationKind::total, 4, {0}),
                                            ConditionVariant::min_axis),
                    std::invalid_argument);
}

TEST_CASE("empty blocks are vacuously complete on their own axis") {
    const Graph k2 = testutil::complete(2);
    Partition forged;
    forged.mode = PartitionMode::open;
    forged.blocks = {{0, 1}, {}};
    forged.block_of = {0, 0};
    forged.singles = {0, 1};
    const Partition open2 = build_partition(
        k2, domination_number(k2, DominationKind::total).certificate, PartitionMode::open);

    const auto inst = build_n_factor_instance(cartesian_product({k2, k2}), {forged, open2},
                                              cert(DominationKind::total, 4, {0, 1}),
                                              ConditionVariant::min_axis);
    // cells over the empty axis-0 block report axis 1 complete; the real cells
    // hold single min-axis entries 2
    CHECK(inst.complete_per_cell == std::vector<std::vector<int>>{{2}, {2}, {1}, {1}});
}

TEST_CASE("theorem 1 ledger on the two by three grid") {
    const Graph k2 = testutil::complete(2);
    const Graph p3 = testutil::path(3);
    ProductGraph prod = cartesian_product({k2, p3});

    const auto prod_gamma = domination_number(prod.graph(), DominationKind::plain);
    CHECK(prod_gamma.number == 2);
    CHECK(prod_gamma.certificate.members == Bitset::of(6, {0, 5}));

    Partition pg = build_partition(k2, domination_number(k2, DominationKind::total).certificate,
                                   PartitionMode::open);
    Partition ph = build_partition(p3, domination_number(p3, DominationKind::plain).certificate,
                                   PartitionMode::closed);
    const auto inst = build_two_factor_instance(std::move(prod), std::move(pg), std::move(ph),
                                                prod_gamma.certificate,
                                                ConditionVariant::membership_or_axis);
    const auto rep = double_count(inst, 1);
    CHECK(rep.cell_product == 2);
    CHECK(rep.d_h == 0);
    CHECK(rep.d_g == 2);
    CHECK(rep.tally == 2);
    check_all_facts(rep);
    CHECK(rep.completions.empty());
}

TEST_CASE("theorem 2 ledger is tight on the four cycle") {
    const auto inst = doubled_edge_instance(ConditionVariant::axis_only, DominationKind::total);
    const auto rep = double_count(inst, 2);
    CHECK(rep.cell_product == 4);
    CHECK(rep.d_h == 2);
    CHECK(rep.d_g == 2);
    CHECK(rep.tally == 4);
    check_all_facts(rep);
}

TEST_CASE("all-ones condition matrix leaves no row gapped") {
    const Graph k2 = testutil::complete(2);
    ProductGraph prod = cartesian_product({k2, k2});
    const auto gt = domination_number(k2, DominationKind::total).certificate;
    Partition pg = build_partition(k2, gt, PartitionMode::open);
    Partition ph = build_partition(k2, gt, PartitionMode::open);
    const auto inst = build_two_factor_instance(std::move(prod), std::move(pg), std::move(ph),
                                                cert(DominationKind::total, 4, {0, 1, 2, 3}),
                                                ConditionVariant::axis_only);
    CHECK(inst.cond.entries == std::vector<int>{1, 1, 1, 1});
    CHECK(inst.cells.d_g == 0);
    CHECK(inst.cells.d_h == 4);
    const auto rep = double_count(inst, 2);
    check_all_facts(rep);
}

TEST_CASE("theorem 4 ledger on the doubled edge") {
    const auto inst = doubled_edge_instance(ConditionVariant::membership_or_axis,
                                            DominationKind::paired);
    CHECK(inst.dom.members == Bitset::of(4, {0, 1}));
    CHECK(inst.dom.pairing == std::vector<VertexPair>{{0, 1}});
    const auto rep = double_count(inst, 4);
    CHECK(rep.cell_product == 1);
    CHECK(rep.d_h == 1);
    CHECK(rep.d_g == 0);
    CHECK(rep.tally == 1);
    check_all_facts(rep);

    REQUIRE(rep.completions.size() == 2);
    CHECK(rep.completions[0].factor.order() == 2);
    CHECK(rep.completions[0].c.none());
    CHECK(rep.completions[0].pairs_b == std::vector<VertexPair>{{0, 1}});
    CHECK(rep.completions[1].c == Bitset::of(2, {0, 1}));
    CHECK(rep.completions[1].pairs_c == std::vector<VertexPair>{{0, 1}});
    CHECK(rep.completions[1].pairs_b.empty());
}

TEST_CASE("theorem 4 ledger survives a pre-paired fiber certificate") {
    // the whole product certificate sits in one fiber, already perfectly
    // paired; the matching on its projection must reuse those pairs or the
    // |M1| + 2|M2| budget breaks
    const Graph g = testutil::cycle(3);
    const Graph h(6, std::vector<VertexPair>{{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}, {4, 5}},
                  "H6");
    auto product = cartesian_product({g, h});

    DominationCertificate prod;
    prod.kind = DominationKind::paired;
    prod.members = Bitset::of(18, {0, 1, 2, 3, 4, 5});
    prod.pairing = {{0, 3}, {1, 2}, {4, 5}};
    REQUIRE(certificate_valid(product.graph(), prod));

    DominationCertificate gc;
    gc.kind = DominationKind::paired;
    gc.members = Bitset::of(3, {0, 1});
    gc.pairing = {{0, 1}};
    DominationCertificate hc;
    hc.kind = DominationKind::paired;
    hc.members = Bitset::of(6, {0, 1, 2, 4});
    hc.pairing = {{0, 1}, {2, 4}};

    const auto inst = build_two_factor_instance(
        std::move(product), build_partition(g, gc, PartitionMode::paired),
        build_partition(h, hc, PartitionMode::paired), std::move(prod),
        ConditionVariant::membership_or_axis);
    const auto rep = double_count(inst, 4);
    check_all_facts(rep);
    REQUIRE(!rep.completions.empty());
    CHECK(rep.completions[0].factor.order() == 6);
    CHECK(rep.completions[0].pairs_b == std::vector<VertexPair>{{0, 3}, {1, 2}, {4, 5}});
}

TEST_CASE("theorem 3 ledger on the cube") {
    const Graph k2 = testutil::complete(2);
    ProductGraph prod = cartesian_product({k2, k2, k2});
    const auto gt_prod = domination_number(prod.graph(), DominationKind::total);
    CHECK(gt_prod.number == 4);

    const auto gt = domination_number(k2, DominationKind::total).certificate;
    std::vector<Partition> parts;
    for (int i = 0; i < 3; ++i) parts.push_back(build_partition(k2, gt, PartitionMode::open));
    const auto inst = build_n_factor_instance(std::move(prod), std::move(parts),
                                              gt_prod.certificate, ConditionVariant::min_axis);
    const auto rep = double_count(inst, 3);
    CHECK(rep.cell_product == 8);
    CHECK(rep.tally == 8);
    check_all_facts(rep);
    CHECK(rep.completions.empty());
}

TEST_CASE("theorem 5 ledger on the doubled edge") {
    const Graph k2 = testutil::complete(2);
    ProductGraph prod = cartesian_product({k2, k2});
    const auto pr_prod = domination_number(prod.graph(), DominationKind::paired);
    CHECK(pr_prod.number == 2);

    const auto pr = domination_number(k2, DominationKind::paired).certificate;
    std::vector<Partition> parts;
    for (int i = 0; i < 2; ++i) parts.push_back(build_partition(k2, pr, PartitionMode::paired));
    const auto inst = build_n_factor_instance(std::move(prod), std::move(parts),
                                              pr_prod.certificate,
                                              ConditionVariant::per_axis_family);
    REQUIRE(inst.complete_per_cell_family.size() == 2);
    CHECK(inst.complete_per_cell_family[0] == std::vector<std::vector<int>>{{1}});
    CHECK(inst.complete_per_cell_family[1] == std::vector<std::vector<int>>{{2}});

    const auto rep = double_count(inst, 5);
    CHECK(rep.cell_product == 1);
    CHECK(rep.tally == 2);
    check_all_facts(rep);
    CHECK(rep.completions.size() == 2);
}

TEST_CASE("ledger layout validation") {
    const auto thm2 = doubled_edge_instance(ConditionVariant::axis_only, DominationKind::total);
    CHECK_THROWS_AS(double_count(thm2, 1), std::invalid_argument);
    CHECK_THROWS_AS(double_count(thm2, 4), std::invalid_argument);
    CHECK_THROWS_AS(double_count(thm2, 3), std::invalid_argument);

    const auto thm4 = doubled_edge_instance(ConditionVariant::membership_or_axis,
                                            DominationKind::paired);
    CHECK_THROWS_AS(double_count(thm4, 2), std::invalid_argument);

    const Graph k2 = testutil::complete(2);
    const auto gt = domination_number(k2, DominationKind::total).certificate;
    const Partition open2 = build_partition(k2, gt, PartitionMode::open);
    const auto thm3 = build_n_factor_instance(cartesian_product({k2, k2}), {open2, open2},
                                              cert(DominationKind::total, 4, {0, 1}),
                                              ConditionVariant::min_axis);
    CHECK_THROWS_AS(double_count(thm3, 5), std::invalid_argument);
    CHECK_THROWS_AS(double_count(thm3, 1), std::invalid_argument);
}
