#include "domlab/machinery.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace domlab {

namespace {

LedgerFact fact(std::string name, bool pass, std::string detail) {
    return {std::move(name), pass, std::move(detail)};
}

// aggregates one kind of repeated check into a single ledger line
struct Agg {
    std::string name;
    long long checked = 0;
    long long failed = 0;
    std::string first_fail;

    explicit Agg(std::string n) : name(std::move(n)) {}

    void add(bool ok, const std::string& where) {
        ++checked;
        if (!ok) {
            if (failed == 0) first_fail = where;
            ++failed;
        }
    }

    LedgerFact done() const {
        std::ostringstream d;
        if (failed == 0)
            d << checked << " checked";
        else
            d << failed << " of " << checked << " failed (first: " << first_fail << ")";
        return {name, failed == 0, d.str()};
    }
};

std::string axis_tag(int axis) { return "axis " + std::to_string(axis + 1); }

} // namespace

ConditionMatrix build_condition_matrix(const ProductGraph& p, const Bitset& dom,
                                       ConditionVariant variant) {
    if (dom.capacity() != p.order())
        throw std::invalid_argument("build_condition_matrix: set does not match product order");
    const bool needs_total =
        variant == ConditionVariant::axis_only || variant == ConditionVariant::min_axis;
    if (needs_total && !is_total_dominating(p.graph(), dom))
        throw std::invalid_argument("build_condition_matrix: set is not total dominating");
    if (!needs_total && !is_dominating(p.graph(), dom))
        throw std::invalid_argument("build_condition_matrix: set is not dominating");

    ConditionMatrix f;
    f.variant = variant;
    f.axes = p.factor_count();
    const int n = p.order();
    const int last = f.axes - 1;

    const auto min_axis_of = [&](int u) {
        for (int axis = 0; axis < f.axes; ++axis)
            if (axis_neighborhood(p, u, axis).intersects(dom)) return axis + 1;
        return 0; // unreachable for dominating sets without self-only coverage
    };

    switch (variant) {
        case ConditionVariant::membership_or_axis:
        case ConditionVariant::axis_only:
            f.entries.assign(static_cast<std::size_t>(n), 0);
            for (int u = 0; u < n; ++u) {
                const bool member = variant == ConditionVariant::membership_or_axis && dom.test(u);
                f.entries[static_cast<std::size_t>(u)] =
                    (member || axis_neighborhood(p, u, last).intersects(dom)) ? 1 : 0;
            }
            break;
        case ConditionVariant::min_axis:
            f.entries.assign(static_cast<std::size_t>(n), 0);
            for (int u = 0; u < n; ++u) {
                const int v = min_axis_of(u);
                if (v == 0)
                    throw std::invalid_argument(
                        "build_condition_matrix: vertex has no axis neighbor in the set");
                f.entries[static_cast<std::size_t>(u)] = v;
            }
            break;
        case ConditionVariant::per_axis_family:
            f.family.assign(static_cast<std::size_t>(f.axes), {});
            for (int axis = 0; axis < f.axes; ++axis) {
                auto& grid = f.family[static_cast<std::size_t>(axis)];
                grid.assign(static_cast<std::size_t>(n), 0);
                for (int u = 0; u < n; ++u) {
                    if (dom.test(u)) {
                        grid[static_cast<std::size_t>(u)] = axis + 1;
                        continue;
                    }
                    const int v = min_axis_of(u);
                    if (v == 0)
                        throw std::invalid_argument(
                            "build_condition_matrix: non-member has no axis neighbor in the set");
                    grid[static_cast<std::size_t>(u)] = v;
                }
            }
            break;
    }
    return f;
}

long long BlockGrid::cell_count() const {
    long long total = 1;
    for (int c : counts) total *= c;
    return total;
}

long long BlockGrid::cell_index(std::span<const int> cell) const {
    if (static_cast<int>(cell.size()) != axes())
        throw std::invalid_argument("cell arity mismatch");
    long long flat = 0;
    for (int i = 0; i < axes(); ++i) {
        const int c = cell[static_cast<std::size_t>(i)];
        if (c < 0 || c >= counts[static_cast<std::size_t>(i)])
            throw std::out_of_range("cell block index out of range");
        flat = flat * counts[static_cast<std::size_t>(i)] + c;
    }
    return flat;
}

std::vector<int> BlockGrid::cell_tuple(long long index) const {
    std::vector<int> cell(static_cast<std::size_t>(axes()));
    for (int i = axes() - 1; i >= 0; --i) {
        cell[static_cast<std::size_t>(i)] = static_cast<int>(index % counts[static_cast<std::size_t>(i)]);
        index /= counts[static_cast<std::size_t>(i)];
    }
    return cell;
}

BlockGrid make_block_grid(std::vector<Partition> parts) {
    BlockGrid bg;
    bg.parts = std::move(parts);
    bg.counts.reserve(bg.parts.size());
    for (const auto& part : bg.parts) bg.counts.push_back(part.block_count());
    return bg;
}

Grid cell_subgrid(const ProductGraph& p, const ConditionMatrix& f, const BlockGrid& bg,
                  std::span<const int> cell, int family_axis) {
    if (bg.axes() != p.factor_count())
        throw std::invalid_argument("cell_subgrid: block grid does not match product");
    const bool family = f.variant == ConditionVariant::per_axis_family;
    if (family != (family_axis >= 0))
        throw std::invalid_argument("cell_subgrid: family axis required exactly for family matrices");

    const int n = bg.axes();
    std::vector<int> dims(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        dims[static_cast<std::size_t>(i)] =
            bg.parts[static_cast<std::size_t>(i)].block_size(cell[static_cast<std::size_t>(i)]);
    Grid g = Grid::zeros(dims);
    if (g.cell_total() == 0) return g;

    const auto& values =
        family ? f.family[static_cast<std::size_t>(family_axis)] : f.entries;
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    std::vector<int> coords(static_cast<std::size_t>(n));
    while (true) {
        for (int i = 0; i < n; ++i)
            coords[static_cast<std::size_t>(i)] =
                bg.parts[static_cast<std::size_t>(i)]
                    .blocks[static_cast<std::size_t>(cell[static_cast<std::size_t>(i)])]
                           [static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        g.put(idx, values[static_cast<std::size_t>(p.encode(coords))]);
        int i = n - 1;
        while (i >= 0 && ++idx[static_cast<std::size_t>(i)] >= dims[static_cast<std::size_t>(i)])
            idx[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
    }
    return g;
}

long long SlabSets::key_index(std::span<const int> key) const {
    if (key.size() != key_axes.size()) throw std::invalid_argument("slab key arity mismatch");
    long long flat = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] < 0 || key[i] >= key_counts[i]) throw std::out_of_range("slab key out of range");
        flat = flat * key_counts[i] + key[i];
    }
    return flat;
}

SlabSets slab_sets(const ProductGraph& p, const Bitset& dom, const BlockGrid& bg,
                   std::span<const int> key_axes, const std::vector<VertexPair>* pairing) {
    if (dom.capacity() != p.order())
        throw std::invalid_argument("slab_sets: set does not match product order");
    SlabSets out;
    out.key_axes.assign(key_axes.begin(), key_axes.end());
    long long slabs = 1;
    for (int axis : out.key_axes) {
        if (axis < 0 || axis >= bg.axes()) throw std::out_of_range("slab_sets: axis out of range");
        out.key_counts.push_back(bg.counts[static_cast<std::size_t>(axis)]);
        slabs *= bg.counts[static_cast<std::size_t>(axis)];
    }
    out.z.assign(static_cast<std::size_t>(slabs), Bitset(p.order()));
    if (pairing)
        out.z_by_match_axis.assign(
            static_cast<std::size_t>(slabs),
            std::vector<Bitset>(static_cast<std::size_t>(p.factor_count()), Bitset(p.order())));

    std::vector<int> match_axis_of;
    if (pairing) {
        match_axis_of.assign(static_cast<std::size_t>(p.order()), -1);
        for (auto [u, v] : *pairing) {
            const int axis = edge_axis(p, u, v);
            match_axis_of[static_cast<std::size_t>(u)] = axis;
            match_axis_of[static_cast<std::size_t>(v)] = axis;
        }
    }

    std::vector<int> key(out.key_axes.size());
    dom.for_each([&](int u) {
        for (std::size_t i = 0; i < out.key_axes.size(); ++i) {
            const int axis = out.key_axes[i];
            key[i] = bg.parts[static_cast<std::size_t>(axis)]
                         .block_of[static_cast<std::size_t>(p.coordinate(u, axis))];
        }
        const auto slab = static_cast<std::size_t>(out.key_index(key));
        out.z[slab].set(u);
        if (pairing) {
            const int ma = match_axis_of[static_cast<std::size_t>(u)];
            if (ma < 0) throw std::invalid_argument("slab_sets: member missing from pairing");
            out.z_by_match_axis[slab][static_cast<std::size_t>(ma)].set(u);
        }
    });
    return out;
}

TwoFactorCells classify_cells(const ProductGraph& p, const ConditionMatrix& f, const BlockGrid& bg) {
    if (bg.axes() != 2 || p.factor_count() != 2)
        throw std::invalid_argument("classify_cells: two-factor layout required");
    if (f.variant != ConditionVariant::membership_or_axis &&
        f.variant != ConditionVariant::axis_only)
        throw std::invalid_argument("classify_cells: binary condition matrix required");

    TwoFactorCells out;
    const int kg = bg.counts[0], kh = bg.counts[1];
    out.cls.assign(static_cast<std::size_t>(kg),
                   std::vector<BinaryCellClass>(static_cast<std::size_t>(kh)));
    out.s_per_g.assign(static_cast<std::size_t>(kg), {});
    out.s_per_h.assign(static_cast<std::size_t>(kh), {});
    for (int gi = 0; gi < kg; ++gi)
        for (int hj = 0; hj < kh; ++hj) {
            const int r = bg.parts[0].block_size(gi);
            const int c = bg.parts[1].block_size(hj);
            BinaryCellClass cls;
            if (r == 0 && c == 0)
                cls = {true, true};
            else if (r == 0)
                cls = {false, true};
            else if (c == 0)
                cls = {true, false};
            else {
                const int cell[2] = {gi, hj};
                cls = classify_binary_cell(cell_subgrid(p, f, bg, cell));
            }
            out.cls[static_cast<std::size_t>(gi)][static_cast<std::size_t>(hj)] = cls;
            if (cls.columns_covered) out.s_per_g[static_cast<std::size_t>(gi)].push_back(hj);
            if (cls.rows_gapped) out.s_per_h[static_cast<std::size_t>(hj)].push_back(gi);
            if (!cls.columns_covered && !cls.rows_gapped) out.uncovered.emplace_back(gi, hj);
        }
    for (const auto& s : out.s_per_g) out.d_h += static_cast<long long>(s.size());
    for (const auto& s : out.s_per_h) out.d_g += static_cast<long long>(s.size());
    return out;
}

bool block_dominated_by_projection(const ProductGraph& p, const BlockGrid& bg, const Bitset& z,
                                   int axis, int block, bool require_nonself) {
    const Bitset proj = project(p, z, axis);
    for (int v : bg.parts[static_cast<std::size_t>(axis)].blocks[static_cast<std::size_t>(block)]) {
        if (!require_nonself && proj.test(v)) continue;
        if (!p.factor(axis).neighbors_open(v).intersects(proj)) return false;
    }
    return true;
}

PlainCompletion completed_dominating_set(const ProductGraph& p, const BlockGrid& bg,
                                         int target_axis, const Bitset& z_slab,
                                         const std::vector<int>& qualifying) {
    const Partition& tp = bg.parts[static_cast<std::size_t>(target_axis)];
    if (tp.mode == PartitionMode::paired)
        throw std::invalid_argument("completed_dominating_set: single representatives required");
    const Graph& factor = p.factor(target_axis);

    PlainCompletion out;
    out.projection = project(p, z_slab, target_axis);
    out.completed = out.projection;
    Bitset qual(tp.block_count());
    for (int b : qualifying) qual.set(b);
    Bitset reps(factor.order());
    for (int b = 0; b < tp.block_count(); ++b)
        if (!qual.test(b)) reps.set(tp.singles[static_cast<std::size_t>(b)]);
    out.completed |= reps;
    out.parts_disjoint = !out.projection.intersects(reps);
    out.dominating = is_dominating(factor, out.completed);
    out.s_count = static_cast<int>(qualifying.size());
    out.z_count = z_slab.count();
    out.bound_ok = out.s_count <= out.projection.count() && out.projection.count() <= out.z_count;
    return out;
}

TotalCompletion completed_total_dominating_set(const ProductGraph& p, const BlockGrid& bg,
                                               int target_axis, const Bitset& z_slab,
                                               const std::vector<int>& qualifying) {
    const Partition& tp = bg.parts[static_cast<std::size_t>(target_axis)];
    if (tp.mode != PartitionMode::open)
        throw std::invalid_argument("completed_total_dominating_set: open partition required");
    const Graph& factor = p.factor(target_axis);

    TotalCompletion out;
    out.projection = project(p, z_slab, target_axis);
    Bitset lset(tp.block_count());
    for (int b : qualifying) lset.set(b);
    for (int b = 0; b < tp.block_count(); ++b)
        if (out.projection.test(tp.singles[static_cast<std::size_t>(b)])) lset.set(b);
    out.completed = out.projection;
    for (int b = 0; b < tp.block_count(); ++b)
        if (!lset.test(b)) out.completed.set(tp.singles[static_cast<std::size_t>(b)]);
    out.total_dominating = is_total_dominating(factor, out.completed);
    out.s_count = static_cast<int>(qualifying.size());
    out.l_count = lset.count();
    out.proj_count = out.projection.count();
    out.z_count = z_slab.count();
    out.minimality_ok = out.completed.count() >= tp.block_count();
    out.chain_ok = out.s_count <= out.l_count && out.l_count <= out.proj_count &&
                   out.proj_count <= out.z_count;
    return out;
}

PairCompletionResult pair_completion(const Graph& h, const Bitset& a, const Bitset& b,
                                     const Bitset& c, const std::vector<VertexPair>& pairs_c,
                                     const std::vector<VertexPair>& pairs_b) {
    const int n = h.order();
    if (a.capacity() != n || b.capacity() != n || c.capacity() != n)
        throw std::invalid_argument("pair_completion: sets do not match graph order");
    if (h.has_isolated_vertex())
        throw std::domain_error("pair_completion: graph has an isolated vertex");
    Bitset c_union(n);
    for (auto [x, y] : pairs_c) {
        if (!h.adjacent(x, y)) throw std::invalid_argument("pair_completion: pair is not an edge");
        if (!c.test(x) || !c.test(y) || c_union.test(x) || c_union.test(y))
            throw std::invalid_argument("pair_completion: pairs must partition c");
        c_union.set(x);
        c_union.set(y);
    }
    if (!(c_union == c)) throw std::invalid_argument("pair_completion: pairs must cover c exactly");
    for (auto [x, y] : pairs_b)
        if (!h.adjacent(x, y) || !b.test(x) || !b.test(y))
            throw std::invalid_argument("pair_completion: b-pair is not an edge inside b");

    PairCompletionResult out;
    Bitset matched(n);
    for (auto [x, y] : pairs_c) {
        out.matching.emplace_back(std::min(x, y), std::max(x, y));
        matched.set(x);
        matched.set(y);
    }
    // seed the matching on b with the surviving projected edges
    auto seeds = normalized_pairing(pairs_b);
    for (auto [x, y] : seeds) {
        if (matched.test(x) || matched.test(y)) continue;
        out.matching.emplace_back(x, y);
        matched.set(x);
        matched.set(y);
    }
    // then extend to a maximal matching on b, low endpoints first
    b.for_each([&](int v) {
        if (matched.test(v)) return;
        Bitset cands = h.neighbors_open(v);
        cands &= b;
        cands.subtract(matched);
        const int w = cands.first();
        if (w >= 0) {
            out.matching.emplace_back(std::min(v, w), std::max(v, w));
            matched.set(v);
            matched.set(w);
        }
    });
    out.m1 = matched;
    out.m2 = b | c;
    out.m2.subtract(matched);

    Bitset e = a | b | c;
    while (true) {
        int v = -1;
        for (int u = e.first(); u >= 0; u = e.next(u))
            if (!matched.test(u)) {
                v = u;
                break;
            }
        if (v < 0) break;
        Bitset cands = h.neighbors_open(v);
        cands.subtract(matched);
        const int w = cands.first();
        if (w >= 0) {
            e.set(w);
            matched.set(v);
            matched.set(w);
            out.matching.emplace_back(std::min(v, w), std::max(v, w));
        } else {
            e.reset(v);
            // all neighbors are matched, so removal must not orphan v's charges
            Bitset charges = h.neighbors_closed(v);
            charges.for_each([&](int u) {
                if (!h.neighbors_closed(u).intersects(e) && !out.defensive_fired) {
                    out.defensive_fired = true;
                    out.defensive_detail = "removal of " + std::to_string(v) +
                                           " left vertex " + std::to_string(u) + " undominated";
                }
            });
        }
    }
    out.e_rec = e;
    std::sort(out.matching.begin(), out.matching.end());
    out.paired_dominating = is_paired_dominating(h, e).ok;
    out.size_bound_ok = e.count() <= 2 * a.count() + out.m1.count() + 2 * out.m2.count();
    return out;
}

TwoFactorInstance build_two_factor_instance(ProductGraph product, Partition g_part,
                                            Partition h_part, DominationCertificate prod_cert,
                                            ConditionVariant variant) {
    if (product.factor_count() != 2)
        throw std::invalid_argument("build_two_factor_instance: exactly two factors required");
    if (variant != ConditionVariant::membership_or_axis && variant != ConditionVariant::axis_only)
        throw std::invalid_argument("build_two_factor_instance: binary condition variant required");
    if (static_cast<int>(g_part.block_of.size()) != product.factor(0).order() ||
        static_cast<int>(h_part.block_of.size()) != product.factor(1).order())
        throw std::invalid_argument("build_two_factor_instance: partition does not match factor");
    if (!certificate_valid(product.graph(), prod_cert))
        throw std::invalid_argument("build_two_factor_instance: invalid product certificate");

    TwoFactorInstance inst{std::move(product),
                           make_block_grid({std::move(g_part), std::move(h_part)}),
                           std::move(prod_cert),
                           {},
                           {},
                           {},
                           {}};
    inst.cond = build_condition_matrix(inst.product, inst.dom.members, variant);
    inst.cells = classify_cells(inst.product, inst.cond, inst.grid);
    const std::vector<VertexPair>* pairing =
        inst.dom.kind == DominationKind::paired ? &inst.dom.pairing : nullptr;
    const int axis_g[1] = {0}, axis_h[1] = {1};
    inst.slabs_g = slab_sets(inst.product, inst.dom.members, inst.grid, axis_g, pairing);
    inst.slabs_h = slab_sets(inst.product, inst.dom.members, inst.grid, axis_h, pairing);
    return inst;
}

NFactorInstance build_n_factor_instance(ProductGraph product, std::vector<Partition> parts,
                                        DominationCertificate prod_cert, ConditionVariant variant) {
    if (variant != ConditionVariant::min_axis && variant != ConditionVariant::per_axis_family)
        throw std::invalid_argument("build_n_factor_instance: n-ary condition variant required");
    if (static_cast<int>(parts.size()) != product.factor_count())
        throw std::invalid_argument("build_n_factor_instance: one partition per factor required");
    for (int i = 0; i < product.factor_count(); ++i)
        if (static_cast<int>(parts[static_cast<std::size_t>(i)].block_of.size()) !=
            product.factor(i).order())
            throw std::invalid_argument("build_n_factor_instance: partition does not match factor");
    if (!certificate_valid(product.graph(), prod_cert))
        throw std::invalid_argument("build_n_factor_instance: invalid product certificate");

    NFactorInstance inst{std::move(product), make_block_grid(std::move(parts)),
                         std::move(prod_cert), {}, {}, {}, {}};
    inst.cond = build_condition_matrix(inst.product, inst.dom.members, variant);

    const int n = inst.grid.axes();
    const long long cells = inst.grid.cell_count();

    const auto complete_axes_vacuous = [&](const Grid& sub) {
        bool empty = false;
        for (int d : sub.dims) empty = empty || d == 0;
        if (!empty) return complete_axes(sub);
        std::vector<int> axes;
        for (int i = 0; i < sub.rank(); ++i)
            if (sub.dims[static_cast<std::size_t>(i)] == 0) axes.push_back(i + 1);
        return axes;
    };

    if (variant == ConditionVariant::min_axis) {
        inst.complete_per_cell.resize(static_cast<std::size_t>(cells));
        for (long long cidx = 0; cidx < cells; ++cidx) {
            const auto cell = inst.grid.cell_tuple(cidx);
            inst.complete_per_cell[static_cast<std::size_t>(cidx)] =
                complete_axes_vacuous(cell_subgrid(inst.product, inst.cond, inst.grid, cell));
        }
    } else {
        inst.complete_per_cell_family.assign(static_cast<std::size_t>(n), {});
        for (int axis = 0; axis < n; ++axis) {
            auto& per_cell = inst.complete_per_cell_family[static_cast<std::size_t>(axis)];
            per_cell.resize(static_cast<std::size_t>(cells));
            for (long long cidx = 0; cidx < cells; ++cidx) {
                const auto cell = inst.grid.cell_tuple(cidx);
                per_cell[static_cast<std::size_t>(cidx)] = complete_axes_vacuous(
                    cell_subgrid(inst.product, inst.cond, inst.grid, cell, axis));
            }
        }
    }

    const std::vector<VertexPair>* pairing =
        inst.dom.kind == DominationKind::paired ? &inst.dom.pairing : nullptr;
    inst.slabs_excluding.reserve(static_cast<std::size_t>(n));
    for (int axis = 0; axis < n; ++axis) {
        std::vector<int> keys;
        for (int other = 0; other < n; ++other)
            if (other != axis) keys.push_back(other);
        inst.slabs_excluding.push_back(
            slab_sets(inst.product, inst.dom.members, inst.grid, keys, pairing));
    }
    return inst;
}

namespace {

// peer-cell slab index for a full cell tuple, dropping `axis`
long long peer_key(const SlabSets& slabs, std::span<const int> cell, int axis) {
    std::vector<int> key;
    key.reserve(cell.size() - 1);
    for (int i = 0; i < static_cast<int>(cell.size()); ++i)
        if (i != axis) key.push_back(cell[static_cast<std::size_t>(i)]);
    return slabs.key_index(key);
}

// matching edges lying inside `members`, projected onto `axis`
std::vector<VertexPair> projected_pairing(const ProductGraph& p,
                                          const std::vector<VertexPair>& pairing,
                                          const Bitset& members, int axis) {
    std::vector<VertexPair> out;
    for (auto [u, v] : pairing)
        if (members.test(u) && members.test(v)) {
            const int x = p.coordinate(u, axis), y = p.coordinate(v, axis);
            out.emplace_back(std::min(x, y), std::max(x, y));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void two_factor_claim_facts(const TwoFactorInstance& inst, DoubleCountResult& r) {
    Agg covered("every cell is columns-covered or rows-gapped");
    const int kg = inst.grid.counts[0], kh = inst.grid.counts[1];
    for (int gi = 0; gi < kg; ++gi)
        for (int hj = 0; hj < kh; ++hj) {
            const auto cls = inst.cells.cls[static_cast<std::size_t>(gi)][static_cast<std::size_t>(hj)];
            covered.add(cls.columns_covered || cls.rows_gapped,
                        "cell (" + std::to_string(gi + 1) + "," + std::to_string(hj + 1) + ")");
        }
    r.facts.push_back(covered.done());

    Agg dom_claim("columns-covered cells: h-block dominated by the slab projection");
    for (int gi = 0; gi < kg; ++gi)
        for (int hj : inst.cells.s_per_g[static_cast<std::size_t>(gi)])
            dom_claim.add(block_dominated_by_projection(inst.product, inst.grid,
                                                        inst.slabs_g.z[static_cast<std::size_t>(gi)],
                                                        1, hj, false),
                          "cell (" + std::to_string(gi + 1) + "," + std::to_string(hj + 1) + ")");
    r.facts.push_back(dom_claim.done());

    Agg nonself_claim("rows-gapped cells: g-block non-self dominated by the slab projection");
    for (int hj = 0; hj < kh; ++hj)
        for (int gi : inst.cells.s_per_h[static_cast<std::size_t>(hj)])
            nonself_claim.add(
                block_dominated_by_projection(inst.product, inst.grid,
                                              inst.slabs_h.z[static_cast<std::size_t>(hj)], 0, gi,
                                              true),
                "cell (" + std::to_string(gi + 1) + "," + std::to_string(hj + 1) + ")");
    r.facts.push_back(nonself_claim.done());

    long long zg = 0, zh = 0;
    for (const auto& z : inst.slabs_g.z) zg += z.count();
    for (const auto& z : inst.slabs_h.z) zh += z.count();
    const long long dsize = inst.dom.members.count();
    r.facts.push_back(fact("slabs partition D on both axes", zg == dsize && zh == dsize,
                           "axis sums " + std::to_string(zg) + ", " + std::to_string(zh) +
                               " vs |D| = " + std::to_string(dsize)));
}

void totals_facts(const TwoFactorInstance& inst, DoubleCountResult& r) {
    const long long dsize = inst.dom.members.count();
    r.facts.push_back(fact(
        "block product does not exceed the qualifying tally",
        r.cell_product <= r.tally,
        std::to_string(r.cell_product) + " <= " + std::to_string(r.d_h) + " + " +
            std::to_string(r.d_g)));
    r.facts.push_back(fact("qualifying tally bounded by 2|D|", r.tally <= 2 * dsize,
                           std::to_string(r.tally) + " <= 2*" + std::to_string(dsize)));
}

} // namespace

DoubleCountResult double_count(const TwoFactorInstance& inst, int theorem) {
    DoubleCountResult r;
    r.cell_product = inst.grid.cell_count();
    r.d_h = inst.cells.d_h;
    r.d_g = inst.cells.d_g;
    r.tally = r.d_h + r.d_g;
    const long long dsize = inst.dom.members.count();

    switch (theorem) {
        case 1: {
            if (inst.cond.variant != ConditionVariant::membership_or_axis ||
                inst.grid.parts[0].mode != PartitionMode::open ||
                inst.grid.parts[1].mode != PartitionMode::closed)
                throw std::invalid_argument("double_count: instance does not match theorem 1");
            two_factor_claim_facts(inst, r);
            Agg plain("axis-1 plain completions dominate with |S| <= |Z|");
            for (int gi = 0; gi < inst.grid.counts[0]; ++gi) {
                const auto comp = completed_dominating_set(
                    inst.product, inst.grid, 1, inst.slabs_g.z[static_cast<std::size_t>(gi)],
                    inst.cells.s_per_g[static_cast<std::size_t>(gi)]);
                plain.add(comp.dominating && comp.parts_disjoint && comp.bound_ok,
                          "slab " + std::to_string(gi + 1));
            }
            r.facts.push_back(plain.done());
            Agg total("axis-0 total completions dominate with |S| <= l <= |proj| <= |Z|");
            for (int hj = 0; hj < inst.grid.counts[1]; ++hj) {
                const auto comp = completed_total_dominating_set(
                    inst.product, inst.grid, 0, inst.slabs_h.z[static_cast<std::size_t>(hj)],
                    inst.cells.s_per_h[static_cast<std::size_t>(hj)]);
                total.add(comp.total_dominating && comp.minimality_ok && comp.chain_ok,
                          "slab " + std::to_string(hj + 1));
            }
            r.facts.push_back(total.done());
            totals_facts(inst, r);
            break;
        }
        case 2: {
            if (inst.cond.variant != ConditionVariant::axis_only ||
                inst.grid.parts[0].mode != PartitionMode::open ||
                inst.grid.parts[1].mode != PartitionMode::open)
                throw std::invalid_argument("double_count: instance does not match theorem 2");
            two_factor_claim_facts(inst, r);
            for (int axis = 0; axis < 2; ++axis) {
                Agg total(axis_tag(axis) + " total completions dominate with |S| <= l <= |proj| <= |Z|");
                const auto& slabs = axis == 1 ? inst.slabs_g : inst.slabs_h;
                const auto& quals = axis == 1 ? inst.cells.s_per_g : inst.cells.s_per_h;
                for (std::size_t s = 0; s < slabs.z.size(); ++s) {
                    const auto comp = completed_total_dominating_set(inst.product, inst.grid, axis,
                                                                     slabs.z[s], quals[s]);
                    total.add(comp.total_dominating && comp.minimality_ok && comp.chain_ok,
                              "slab " + std::to_string(s + 1));
                }
                r.facts.push_back(total.done());
            }
            totals_facts(inst, r);
            break;
        }
        case 4: {
            if (inst.cond.variant != ConditionVariant::membership_or_axis ||
                inst.grid.parts[0].mode != PartitionMode::paired ||
                inst.grid.parts[1].mode != PartitionMode::paired ||
                inst.dom.kind != DominationKind::paired)
                throw std::invalid_argument("double_count: instance does not match theorem 4");
            two_factor_claim_facts(inst, r);

            // split consistency: members grouped by the axis of their matching edge
            long long dg_members = 0, dh_members = 0;
            for (auto [u, v] : inst.dom.pairing) {
                const int axis = edge_axis(inst.product, u, v);
                (axis == 0 ? dg_members : dh_members) += 2;
            }
            long long zg0 = 0, zg1 = 0;
            for (const auto& split : inst.slabs_g.z_by_match_axis) {
                zg0 += split[0].count();
                zg1 += split[1].count();
            }
            r.facts.push_back(fact("matching-axis split partitions D",
                                   zg0 == dg_members && zg1 == dh_members &&
                                       zg0 + zg1 == dsize,
                                   std::to_string(zg0) + " + " + std::to_string(zg1) + " = " +
                                       std::to_string(dsize)));

            Agg pairfacts("axis-1 pair completions: paired dominating, bounds hold");
            Agg derived("per-slab 2|S_i| <= 2|Z_G_i| + |Z_H_i|");
            for (int gi = 0; gi < inst.grid.counts[0]; ++gi) {
                const auto& split = inst.slabs_g.z_by_match_axis[static_cast<std::size_t>(gi)];
                const Bitset a = project(inst.product, split[0], 1);
                const Bitset b = project(inst.product, split[1], 1);
                const auto& qual = inst.cells.s_per_g[static_cast<std::size_t>(gi)];
                Bitset qual_set(inst.grid.counts[1]);
                for (int q : qual) qual_set.set(q);
                Bitset c(inst.product.factor(1).order());
                std::vector<VertexPair> pairs_c;
                for (int hj = 0; hj < inst.grid.counts[1]; ++hj)
                    if (!qual_set.test(hj)) {
                        const auto [x, y] = inst.grid.parts[1].pairs[static_cast<std::size_t>(hj)];
                        pairs_c.emplace_back(x, y);
                        c.set(x);
                        c.set(y);
                    }
                const auto pairs_b = projected_pairing(inst.product, inst.dom.pairing, split[1], 1);
                const auto res = pair_completion(inst.product.factor(1), a, b, c, pairs_c, pairs_b);
                const long long zg = split[0].count(), zh = split[1].count();
                const bool counting =
                    res.m1.count() + 2 * res.m2.count() <= c.count() + zh &&
                    res.e_rec.count() >= 2 * inst.grid.counts[1];
                pairfacts.add(res.paired_dominating && res.size_bound_ok &&
                                  !res.defensive_fired && counting,
                              "slab " + std::to_string(gi + 1) +
                                  (res.defensive_fired ? " [FINDING: " + res.defensive_detail + "]"
                                                       : ""));
                derived.add(2 * static_cast<long long>(qual.size()) <= 2 * zg + zh,
                            "slab " + std::to_string(gi + 1));
                r.completions.push_back({inst.product.factor(1), a, b, c, pairs_c, pairs_b});
            }
            r.facts.push_back(pairfacts.done());
            r.facts.push_back(derived.done());

            Agg pairfacts_g("axis-0 pair completions: paired dominating, bounds hold");
            Agg derived_g("per-slab 2|S-bar_j| <= |Z-bar_G_j| + 2|Z-bar_H_j|");
            for (int hj = 0; hj < inst.grid.counts[1]; ++hj) {
                const auto& split = inst.slabs_h.z_by_match_axis[static_cast<std::size_t>(hj)];
                const Bitset a = project(inst.product, split[1], 0);
                const Bitset b = project(inst.product, split[0], 0);
                const auto& qual = inst.cells.s_per_h[static_cast<std::size_t>(hj)];
                Bitset qual_set(inst.grid.counts[0]);
                for (int q : qual) qual_set.set(q);
                Bitset c(inst.product.factor(0).order());
                std::vector<VertexPair> pairs_c;
                for (int gi = 0; gi < inst.grid.counts[0]; ++gi)
                    if (!qual_set.test(gi)) {
                        const auto [x, y] = inst.grid.parts[0].pairs[static_cast<std::size_t>(gi)];
                        pairs_c.emplace_back(x, y);
                        c.set(x);
                        c.set(y);
                    }
                const auto pairs_b = projected_pairing(inst.product, inst.dom.pairing, split[0], 0);
                const auto res = pair_completion(inst.product.factor(0), a, b, c, pairs_c, pairs_b);
                const long long zg = split[0].count(), zh = split[1].count();
                const bool counting =
                    res.m1.count() + 2 * res.m2.count() <= c.count() + zg &&
                    res.e_rec.count() >= 2 * inst.grid.counts[0];
                pairfacts_g.add(res.paired_dominating && res.size_bound_ok &&
                                    !res.defensive_fired && counting,
                                "slab " + std::to_string(hj + 1) +
                                    (res.defensive_fired
                                         ? " [FINDING: " + res.defensive_detail + "]"
                                         : ""));
                derived_g.add(2 * static_cast<long long>(qual.size()) <= zg + 2 * zh,
                              "slab " + std::to_string(hj + 1));
                r.completions.push_back({inst.product.factor(0), a, b, c, pairs_c, pairs_b});
            }
            r.facts.push_back(pairfacts_g.done());
            r.facts.push_back(derived_g.done());

            r.facts.push_back(fact(
                "block product does not exceed the qualifying tally",
                r.cell_product <= r.tally,
                std::to_string(r.cell_product) + " <= " + std::to_string(r.d_h) + " + " +
                    std::to_string(r.d_g)));
            r.facts.push_back(fact("2(d_H + d_G) <= 3|D|", 2 * r.tally <= 3 * dsize,
                                   "2*" + std::to_string(r.tally) + " <= 3*" +
                                       std::to_string(dsize)));
            break;
        }
        default:
            throw std::invalid_argument("double_count: two-factor layout covers ids 1, 2, 4");
    }
    for (const auto& f : r.facts) r.all_pass = r.all_pass && f.pass;
    return r;
}

DoubleCountResult double_count(const NFactorInstance& inst, int theorem) {
    DoubleCountResult r;
    r.cell_product = inst.grid.cell_count();
    const long long dsize = inst.dom.members.count();
    const int n = inst.grid.axes();
    const long long cells = inst.grid.cell_count();

    if (theorem == 3) {
        if (inst.cond.variant != ConditionVariant::min_axis)
            throw std::invalid_argument("double_count: instance does not match theorem 3");

        Agg covered("every cell has a complete axis");
        std::vector<long long> d(static_cast<std::size_t>(n), 0);
        for (long long cidx = 0; cidx < cells; ++cidx) {
            const auto& axes = inst.complete_per_cell[static_cast<std::size_t>(cidx)];
            covered.add(!axes.empty(), "cell " + std::to_string(cidx));
            for (int j : axes) ++d[static_cast<std::size_t>(j - 1)];
        }
        r.facts.push_back(covered.done());
        for (long long dj : d) r.tally += dj;

        for (int axis = 0; axis < n; ++axis) {
            const auto& slabs = inst.slabs_excluding[static_cast<std::size_t>(axis)];
            long long zsum = 0;
            for (const auto& z : slabs.z) zsum += z.count();
            r.facts.push_back(fact(axis_tag(axis) + " slabs partition D", zsum == dsize,
                                   std::to_string(zsum) + " vs " + std::to_string(dsize)));

            // qualifying blocks per peer slab
            std::vector<std::vector<int>> s_per_slab(slabs.z.size());
            for (long long cidx = 0; cidx < cells; ++cidx) {
                const auto cell = inst.grid.cell_tuple(cidx);
                const auto& axes = inst.complete_per_cell[static_cast<std::size_t>(cidx)];
                if (std::find(axes.begin(), axes.end(), axis + 1) == axes.end()) continue;
                s_per_slab[static_cast<std::size_t>(peer_key(slabs, cell, axis))].push_back(
                    cell[static_cast<std::size_t>(axis)]);
            }
            long long stotal = 0;
            Agg nonself(axis_tag(axis) +
                        " complete cells: block non-self dominated by the slab projection");
            Agg total(axis_tag(axis) + " total completions with |S| <= l <= |proj| <= |Z|");
            for (std::size_t s = 0; s < slabs.z.size(); ++s) {
                auto& qual = s_per_slab[s];
                std::sort(qual.begin(), qual.end());
                qual.erase(std::unique(qual.begin(), qual.end()), qual.end());
                stotal += static_cast<long long>(qual.size());
                for (int x : qual)
                    nonself.add(block_dominated_by_projection(inst.product, inst.grid, slabs.z[s],
                                                              axis, x, true),
                                "slab " + std::to_string(s + 1) + " block " + std::to_string(x + 1));
                const auto comp = completed_total_dominating_set(inst.product, inst.grid, axis,
                                                                 slabs.z[s], qual);
                total.add(comp.total_dominating && comp.minimality_ok && comp.chain_ok,
                          "slab " + std::to_string(s + 1));
            }
            r.facts.push_back(nonself.done());
            r.facts.push_back(total.done());
            r.facts.push_back(fact(axis_tag(axis) + " tally consistent and bounded by |D|",
                                   stotal == d[static_cast<std::size_t>(axis)] &&
                                       d[static_cast<std::size_t>(axis)] <= dsize,
                                   "d = " + std::to_string(d[static_cast<std::size_t>(axis)]) +
                                       ", |D| = " + std::to_string(dsize)));
        }
        r.facts.push_back(fact("block product does not exceed the tally sum",
                               r.cell_product <= r.tally,
                               std::to_string(r.cell_product) + " <= " + std::to_string(r.tally)));
        r.facts.push_back(fact("tally sum bounded by n|D|", r.tally <= n * dsize,
                               std::to_string(r.tally) + " <= " + std::to_string(n) + "*" +
                                   std::to_string(dsize)));
    } else if (theorem == 5) {
        if (inst.cond.variant != ConditionVariant::per_axis_family ||
            inst.dom.kind != DominationKind::paired)
            throw std::invalid_argument("double_count: instance does not match theorem 5");

        Agg covered("every cell has a complete axis in every family matrix");
        Agg transfer("complete axes transfer to their own family matrix");
        Agg self_covered("every cell is self-complete for some axis");
        std::vector<long long> d_ii(static_cast<std::size_t>(n), 0);
        for (long long cidx = 0; cidx < cells; ++cidx) {
            bool any_self = false;
            for (int i = 0; i < n; ++i) {
                const auto& axes =
                    inst.complete_per_cell_family[static_cast<std::size_t>(i)]
                                                 [static_cast<std::size_t>(cidx)];
                covered.add(!axes.empty(),
                            "cell " + std::to_string(cidx) + " matrix " + std::to_string(i + 1));
                for (int j : axes) {
                    const auto& own =
                        inst.complete_per_cell_family[static_cast<std::size_t>(j - 1)]
                                                     [static_cast<std::size_t>(cidx)];
                    transfer.add(std::find(own.begin(), own.end(), j) != own.end(),
                                 "cell " + std::to_string(cidx) + " matrix " +
                                     std::to_string(i + 1) + " axis " + std::to_string(j));
                }
                if (std::find(axes.begin(), axes.end(), i + 1) != axes.end()) {
                    any_self = true;
                    ++d_ii[static_cast<std::size_t>(i)];
                }
            }
            self_covered.add(any_self, "cell " + std::to_string(cidx));
        }
        r.facts.push_back(covered.done());
        r.facts.push_back(transfer.done());
        r.facts.push_back(self_covered.done());
        for (long long v : d_ii) r.tally += v;

        // member counts per matching axis
        std::vector<long long> d_members(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : inst.dom.pairing)
            d_members[static_cast<std::size_t>(edge_axis(inst.product, u, v))] += 2;

        for (int axis = 0; axis < n; ++axis) {
            const auto& slabs = inst.slabs_excluding[static_cast<std::size_t>(axis)];
            long long zsum = 0, zself = 0;
            for (std::size_t s = 0; s < slabs.z.size(); ++s) {
                zsum += slabs.z[s].count();
                zself += slabs.z_by_match_axis[s][static_cast<std::size_t>(axis)].count();
            }
            r.facts.push_back(
                fact(axis_tag(axis) + " slabs and splits partition D",
                     zsum == dsize && zself == d_members[static_cast<std::size_t>(axis)],
                     "sum " + std::to_string(zsum) + ", self-axis " + std::to_string(zself)));

            std::vector<std::vector<int>> s_per_slab(slabs.z.size());
            for (long long cidx = 0; cidx < cells; ++cidx) {
                const auto cell = inst.grid.cell_tuple(cidx);
                const auto& axes = inst.complete_per_cell_family[static_cast<std::size_t>(axis)]
                                                                [static_cast<std::size_t>(cidx)];
                if (std::find(axes.begin(), axes.end(), axis + 1) == axes.end()) continue;
                s_per_slab[static_cast<std::size_t>(peer_key(slabs, cell, axis))].push_back(
                    cell[static_cast<std::size_t>(axis)]);
            }

            long long stotal = 0;
            Agg domclaim(axis_tag(axis) +
                         " self-complete cells: block dominated by the slab projection");
            Agg pairfacts(axis_tag(axis) + " pair completions: paired dominating, bounds hold");
            Agg derived(axis_tag(axis) + " per-slab 2|S| <= 2|Z-other| + |Z-self|");
            for (std::size_t s = 0; s < slabs.z.size(); ++s) {
                auto& qual = s_per_slab[s];
                std::sort(qual.begin(), qual.end());
                qual.erase(std::unique(qual.begin(), qual.end()), qual.end());
                stotal += static_cast<long long>(qual.size());
                for (int x : qual)
                    domclaim.add(block_dominated_by_projection(inst.product, inst.grid,
                                                               slabs.z[s], axis, x, false),
                                 "slab " + std::to_string(s + 1) + " block " +
                                     std::to_string(x + 1));

                Bitset collapse(inst.product.order());
                for (int other = 0; other < n; ++other)
                    if (other != axis) collapse |= slabs.z_by_match_axis[s][static_cast<std::size_t>(other)];
                const Bitset a = project(inst.product, collapse, axis);
                const Bitset b = project(
                    inst.product, slabs.z_by_match_axis[s][static_cast<std::size_t>(axis)], axis);
                Bitset qual_set(inst.grid.counts[static_cast<std::size_t>(axis)]);
                for (int q : qual) qual_set.set(q);
                Bitset c(inst.product.factor(axis).order());
                std::vector<VertexPair> pairs_c;
                for (int blk = 0; blk < inst.grid.counts[static_cast<std::size_t>(axis)]; ++blk)
                    if (!qual_set.test(blk)) {
                        const auto [x, y] =
                            inst.grid.parts[static_cast<std::size_t>(axis)]
                                .pairs[static_cast<std::size_t>(blk)];
                        pairs_c.emplace_back(x, y);
                        c.set(x);
                        c.set(y);
                    }
                const auto pairs_b = projected_pairing(
                    inst.product, inst.dom.pairing,
                    slabs.z_by_match_axis[s][static_cast<std::size_t>(axis)], axis);
                const auto res =
                    pair_completion(inst.product.factor(axis), a, b, c, pairs_c, pairs_b);
                const long long zself_slab =
                    slabs.z_by_match_axis[s][static_cast<std::size_t>(axis)].count();
                const long long zother = slabs.z[s].count() - zself_slab;
                const bool counting =
                    res.m1.count() + 2 * res.m2.count() <= c.count() + zself_slab &&
                    res.e_rec.count() >= 2 * inst.grid.counts[static_cast<std::size_t>(axis)];
                pairfacts.add(res.paired_dominating && res.size_bound_ok &&
                                  !res.defensive_fired && counting,
                              "slab " + std::to_string(s + 1) +
                                  (res.defensive_fired
                                       ? " [FINDING: " + res.defensive_detail + "]"
                                       : ""));
                derived.add(2 * static_cast<long long>(qual.size()) <= 2 * zother + zself_slab,
                            "slab " + std::to_string(s + 1));
                r.completions.push_back({inst.product.factor(axis), a, b, c, pairs_c, pairs_b});
            }
            r.facts.push_back(domclaim.done());
            r.facts.push_back(pairfacts.done());
            r.facts.push_back(derived.done());
            r.facts.push_back(
                fact(axis_tag(axis) + " tally consistent with 2|d_ii| <= 2|D| - |D_i|",
                     stotal == d_ii[static_cast<std::size_t>(axis)] &&
                         2 * d_ii[static_cast<std::size_t>(axis)] <=
                             2 * dsize - d_members[static_cast<std::size_t>(axis)],
                     "d_ii = " + std::to_string(d_ii[static_cast<std::size_t>(axis)]) +
                         ", |D_i| = " + std::to_string(d_members[static_cast<std::size_t>(axis)])));
        }
        r.facts.push_back(fact("block product does not exceed the self-tally sum",
                               r.cell_product <= r.tally,
                               std::to_string(r.cell_product) + " <= " + std::to_string(r.tally)));
        r.facts.push_back(fact(
            "doubled self-tally bounded by (2n-1)|D|", 2 * r.tally <= (2 * n - 1) * dsize,
            "2*" + std::to_string(r.tally) + " <= " + std::to_string(2 * n - 1) + "*" +
                std::to_string(dsize)));
    } else {
        throw std::invalid_argument("double_count: n-factor layout covers ids 3 and 5");
    }
    for (const auto& f : r.facts) r.all_pass = r.all_pass && f.pass;
    return r;
}

} // namespace domlab
