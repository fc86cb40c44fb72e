#pragma once

// Randomized peeling built on window sampling. prob_peel runs the batch
// threshold rule against estimated degrees only, never building the full
// catalog; hybrid_peel runs a fixed number of sampled iterations to cut
// the network down, then finishes with the exact greedy peeler.

#include <cstdint>
#include <optional>

#include "aldente/peel.hpp"
#include "aldente/sample.hpp"

namespace aldente {

struct RandPeelConfig {
    double xi = 0.1;  // batch slack, must be positive
    SampleConfig sample;
    std::optional<unsigned> J;  // hybrid only: sampled iterations before the exact phase
};

struct RandPeelOutput {
    DensityResult result;
    // Peeling history in the same shape the deterministic peelers emit.
    // Snapshot tau and density carry the estimates computed on that set;
    // the final snapshot never receives an estimate and reports zero for
    // prob_peel, or the exact survivor figures for hybrid_peel. When the
    // hybrid exact phase wins, argmax points at the survivor snapshot and
    // the answer is a subset of it.
    PeelTrace trace;
    std::uint64_t total_samples = 0;
    unsigned iterations = 0;
};

// Fully sampled peeling. Each iteration estimates degrees with its own
// failure budget eta/2^i, peels everything under the batch threshold,
// and tracks the candidate with the best estimated density. The returned
// result carries both the winning estimate and the exact density of that
// set, recomputed once at the end. An estimate can miss; the exact
// density is the honest figure of merit.
RandPeelOutput prob_peel(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                         const WeightFunction& tau, const RandPeelConfig& config);

// Sampled iterations 1..J with budgets eta/J, then exact greedy on the
// survivors. Returns the best of the J sampled candidates and the greedy
// result, comparing sampled candidates by their estimates and the greedy
// winner by exact density. J defaults to 3 when the network has at least
// ten million edges, else 2.
RandPeelOutput hybrid_peel(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                           const WeightFunction& tau, const RandPeelConfig& config);

}  // namespace aldente
