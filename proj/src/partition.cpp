#include "domlab/partition.hpp"

#include <stdexcept>

namespace domlab {

Partition build_partition(const Graph& g, const DominationCertificate& cert, PartitionMode mode) {
    const bool mode_matches =
        (mode == PartitionMode::open && cert.kind == DominationKind::total) ||
        (mode == PartitionMode::closed && cert.kind == DominationKind::plain) ||
        (mode == PartitionMode::paired && cert.kind == DominationKind::paired);
    if (!mode_matches)
        throw std::invalid_argument("build_partition: certificate kind does not match mode");
    if (!certificate_valid(g, cert))
        throw std::invalid_argument("build_partition: invalid certificate");

    Partition part;
    part.mode = mode;
    int k = 0;
    if (mode == PartitionMode::paired) {
        part.pairs = normalized_pairing(cert.pairing);
        k = static_cast<int>(part.pairs.size());
    } else {
        part.singles = cert.members.to_vector();
        k = static_cast<int>(part.singles.size());
    }
    part.blocks.assign(static_cast<std::size_t>(k), {});
    part.block_of.assign(static_cast<std::size_t>(g.order()), -1);

    if (mode == PartitionMode::closed)
        for (int j = 0; j < k; ++j)
            part.block_of[static_cast<std::size_t>(part.singles[static_cast<std::size_t>(j)])] = j;
    if (mode == PartitionMode::paired)
        for (int i = 0; i < k; ++i) {
            part.block_of[static_cast<std::size_t>(part.pairs[static_cast<std::size_t>(i)].first)] = i;
            part.block_of[static_cast<std::size_t>(part.pairs[static_cast<std::size_t>(i)].second)] = i;
        }

    const auto admissible = [&](int v, int b) {
        switch (mode) {
            case PartitionMode::open:
                return g.adjacent(v, part.singles[static_cast<std::size_t>(b)]);
            case PartitionMode::closed: {
                const int rep = part.singles[static_cast<std::size_t>(b)];
                return v == rep || g.adjacent(v, rep);
            }
            case PartitionMode::paired: {
                const auto [x, y] = part.pairs[static_cast<std::size_t>(b)];
                return v == x || v == y || g.adjacent(v, x) || g.adjacent(v, y);
            }
        }
        return false;
    };

    for (int v = 0; v < g.order(); ++v) {
        if (part.block_of[static_cast<std::size_t>(v)] >= 0) continue;
        for (int b = 0; b < k; ++b)
            if (admissible(v, b)) {
                part.block_of[static_cast<std::size_t>(v)] = b;
                break;
            }
        if (part.block_of[static_cast<std::size_t>(v)] < 0)
            throw std::logic_error("build_partition: unassignable vertex despite valid certificate");
    }
    for (int v = 0; v < g.order(); ++v)
        part.blocks[static_cast<std::size_t>(part.block_of[static_cast<std::size_t>(v)])].push_back(v);
    return part;
}

} // namespace domlab
