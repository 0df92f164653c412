#pragma once

#include <vector>

#include "domlab/domination.hpp"
#include "domlab/graph.hpp"

namespace domlab {

// How a block may relate to its representative(s):
//   open:   D_i is a subset of N(u_i), u_i drawn from a total certificate
//   closed: rep_j belongs to D_j, D_j a subset of N[rep_j], from a plain certificate
//   paired: {x_i, y_i} lie in D_i, D_i a subset of N[x_i] or N[y_i], from a paired certificate
enum class PartitionMode { open, closed, paired };

struct Partition {
    PartitionMode mode = PartitionMode::open;
    std::vector<std::vector<int>> blocks; // sorted vertex lists, possibly empty (open mode)
    std::vector<int> block_of;            // vertex -> block index
    std::vector<int> singles;             // open/closed representatives, ascending
    std::vector<VertexPair> pairs;        // paired representatives, normalized

    int block_count() const { return static_cast<int>(blocks.size()); }
    int block_size(int b) const { return static_cast<int>(blocks[static_cast<std::size_t>(b)].size()); }
};

// Partition V(g) into one block per certificate representative. Required
// representatives are pinned first (closed: the rep itself; paired: both pair
// members); every other vertex joins the lowest-index admissible block.
Partition build_partition(const Graph& g, const DominationCertificate& cert, PartitionMode mode);

} // namespace domlab
