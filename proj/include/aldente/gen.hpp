#pragma once

// Synthetic network generators: the layered fixture whose static and
// temporal optima provably diverge, and a seeded community-structured
// generator large enough for timing runs.

#include <cstdint>
#include <vector>

#include "aldente/tgraph.hpp"

namespace aldente {

struct LayeredFixture {
    TemporalNetwork network;
    std::vector<VertexId> static_block;    // three layers of n/4, dense in 2-paths, zero instances
    std::vector<VertexId> temporal_block;  // three layers of n/12, carries all the instances
};

// n must be a positive multiple of 12. The static block chains its
// layers with timestamps 2 then 1, so no temporal 2-path exists inside
// it; the temporal block uses 1 then 2. With motif a->b->c and delta
// covering both steps, the temporal optimum lives entirely in the
// temporal block while the static 2-path density peaks on the static
// block.
LayeredFixture layered_fixture(std::uint64_t n);

struct SyntheticConfig {
    std::uint64_t communities = 40;
    std::uint64_t vertices_per_community = 1100;
    std::uint64_t edges_per_community = 12000;
    std::uint64_t background_edges = 65000;
    double span = 2.92e7;          // total timestamp range in seconds
    double burst_width = 90000.0;  // community activity concentrates in bursts this wide
    std::uint64_t seed = 1;
};

// Communities emit bursts of internal edges at random burst centers plus
// a sprinkle of uniform cross-community background edges. Deterministic
// in the seed.
TemporalNetwork synthetic_network(const SyntheticConfig& config);

}  // namespace aldente
