#pragma once

// Deterministic peeling heuristics. Both build the exact catalog, then
// repeatedly remove low-degree vertices and track the densest snapshot
// seen along the way. Greedy removes one minimum-degree vertex per step,
// the batch variant removes every vertex below a slack threshold per
// iteration and carries a quality factor of about 1/(k(1+xi)).

#include <vector>

#include "aldente/kcis.hpp"
#include "aldente/result.hpp"

namespace aldente {

struct PeelOutput {
    DensityResult result;
    PeelTrace trace;
};

// One vertex at a time, minimum catalog degree, ties broken by smallest
// vertex id. The trace holds every intermediate subset down to size k;
// the result is the densest of them.
PeelOutput greedy_peel(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                       const WeightFunction& tau);

// Removes the whole set {v : deg(v) <= k(1+xi) * tau(W)/|W|} per
// iteration. Terminates in at most ceil(log_{1+xi} n) + 1 iterations.
// xi must be positive.
PeelOutput batch_peel(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                      const WeightFunction& tau, double xi);

}  // namespace aldente
