#pragma once

// Result records shared by every solver: the chosen vertex set with its
// exactly re-evaluated density, and the peeling trace that produced it.

#include <cmath>
#include <cstddef>
#include <vector>

#include "aldente/common.hpp"

namespace aldente {

struct DensityResult {
    std::vector<VertexId> vertices;  // internal ids, sorted ascending; empty when no instance exists
    double density = 0.0;            // exact, re-evaluated on `vertices` from scratch
    double tau = 0.0;                // exact total instance weight inside the returned set
    // Estimated density the randomized peelers selected by; NaN for
    // deterministic algorithms and for hybrid answers chosen in the
    // exact phase.
    double estimated_density = std::nan("");
    std::size_t iterations = 0;  // algorithm-specific loop count (bisections, removals, or sampling rounds)
    // Set when a sampling round was capped below the requested sample
    // count, voiding the probabilistic guarantee for that run.
    bool best_effort = false;
};

struct PeelSnapshot {
    std::size_t size = 0;    // surviving vertex count
    double tau = 0.0;        // total weight of the surviving set (estimated for sampling peelers)
    double density = 0.0;    // tau / size, 0 for the empty set
};

struct PeelTrace {
    // snapshots[0] always covers the full starting vertex set.
    std::vector<PeelSnapshot> snapshots;
    // batches[i] holds the vertices removed between snapshots i and i+1,
    // in removal order. The batches are disjoint subsets of the starting
    // set, so the trace is O(n) regardless of length.
    std::vector<std::vector<VertexId>> batches;
    std::size_t argmax = 0;  // snapshot index of the reported solution
};

// Reconstructs the surviving vertex set at a snapshot: the starting set
// minus every batch before it. Returned sorted ascending.
std::vector<VertexId> trace_set_at(const std::vector<VertexId>& start, const PeelTrace& trace,
                                   std::size_t snapshot_index);

}  // namespace aldente
