#pragma once

#include <span>
#include <vector>

namespace domlab {

// Dense n-dimensional grid of small integers, row-major with the last axis
// fastest. Used for the per-cell condition submatrices.
struct Grid {
    std::vector<int> dims;
    std::vector<int> values;

    static Grid zeros(std::vector<int> dims);

    int rank() const { return static_cast<int>(dims.size()); }
    long long cell_total() const;
    long long flat_index(std::span<const int> idx) const;
    int at(std::span<const int> idx) const { return values[static_cast<std::size_t>(flat_index(idx))]; }
    void put(std::span<const int> idx, int v) { values[static_cast<std::size_t>(flat_index(idx))] = v; }
};

struct BinaryCellClass {
    bool columns_covered = false; // every column contains a 1
    bool rows_gapped = false;     // every row contains a 0
};

// Classification of a nonempty binary matrix (rank-2 grid, entries 0/1, both
// dimensions positive). At least one of the two flags always holds.
BinaryCellClass classify_binary_cell(const Grid& m);

// For a nonempty grid with entries in 1..rank: the 1-based axes j such that
// every slice fixing axis j contains the value j. Never empty.
std::vector<int> complete_axes(const Grid& m);

} // namespace domlab
