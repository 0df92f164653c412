#include "domlab/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace domlab {

Grid Grid::zeros(std::vector<int> dims) {
    Grid g;
    g.dims = std::move(dims);
    long long total = 1;
    for (int d : g.dims) {
        if (d < 0) throw std::invalid_argument("grid dimension must be nonnegative");
        total *= d;
    }
    g.values.assign(static_cast<std::size_t>(total), 0);
    return g;
}

long long Grid::cell_total() const {
    long long total = 1;
    for (int d : dims) total *= d;
    return total;
}

long long Grid::flat_index(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != rank())
        throw std::invalid_argument("grid index arity mismatch");
    long long flat = 0;
    for (int i = 0; i < rank(); ++i) {
        const int c = idx[static_cast<std::size_t>(i)];
        if (c < 0 || c >= dims[static_cast<std::size_t>(i)])
            throw std::out_of_range("grid index out of range");
        flat = flat * dims[static_cast<std::size_t>(i)] + c;
    }
    return flat;
}

BinaryCellClass classify_binary_cell(const Grid& m) {
    if (m.rank() != 2) throw std::invalid_argument("classify_binary_cell: expected a matrix");
    const int rows = m.dims[0], cols = m.dims[1];
    if (rows == 0 || cols == 0) throw std::invalid_argument("classify_binary_cell: empty matrix");
    for (int v : m.values)
        if (v != 0 && v != 1) throw std::invalid_argument("classify_binary_cell: entries must be 0/1");

    BinaryCellClass out;
    out.columns_covered = true;
    for (int c = 0; c < cols && out.columns_covered; ++c) {
        bool has_one = false;
        for (int r = 0; r < rows && !has_one; ++r)
            has_one = m.values[static_cast<std::size_t>(r) * cols + c] == 1;
        out.columns_covered = has_one;
    }
    out.rows_gapped = true;
    for (int r = 0; r < rows && out.rows_gapped; ++r) {
        bool has_zero = false;
        for (int c = 0; c < cols && !has_zero; ++c)
            has_zero = m.values[static_cast<std::size_t>(r) * cols + c] == 0;
        out.rows_gapped = has_zero;
    }
    return out;
}

std::vector<int> complete_axes(const Grid& m) {
    const int n = m.rank();
    if (n < 1) throw std::invalid_argument("complete_axes: rank must be positive");
    for (int d : m.dims)
        if (d == 0) throw std::invalid_argument("complete_axes: empty grid");
    for (int v : m.values)
        if (v < 1 || v > n) throw std::invalid_argument("complete_axes: entry out of 1..rank");

    std::vector<int> out;
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int axis = 0; axis < n; ++axis) {
        bool complete = true;
        for (int fixed = 0; fixed < m.dims[static_cast<std::size_t>(axis)] && complete; ++fixed) {
            // scan the slice with coordinate `fixed` on `axis` for the value axis+1
            std::fill(idx.begin(), idx.end(), 0);
            idx[static_cast<std::size_t>(axis)] = fixed;
            bool found = false;
            while (!found) {
                if (m.at(idx) == axis + 1) {
                    found = true;
                    break;
                }
                int i = n - 1;
                while (i >= 0) {
                    if (i == axis) {
                        --i;
                        continue;
                    }
                    if (++idx[static_cast<std::size_t>(i)] < m.dims[static_cast<std::size_t>(i)]) break;
                    idx[static_cast<std::size_t>(i)] = 0;
                    --i;
                }
                if (i < 0) break;
            }
            complete = found;
        }
        if (complete) out.push_back(axis + 1);
    }
    return out;
}

} // namespace domlab
