#pragma once

// Reference implementations for testing. Deliberately naive: the
// instance enumerator tries every ordered edge subsequence and the
// optimizer tries every vertex subset. Hard-capped to sizes where that
// is tractable.

#include <cstdint>
#include <vector>

#include "aldente/match.hpp"
#include "aldente/result.hpp"
#include "aldente/tgraph.hpp"

namespace aldente {
namespace oracle {

// All delta-instances by brute force over edge subsequences. Throws
// std::length_error above 14 edges.
std::vector<DeltaInstance> brute_force_instances(const TemporalNetwork& t,
                                                 const TemporalMotif& motif, double delta);

// Exhaustive maximum-density subset. Ties broken toward the
// lexicographically smallest sorted vertex set. Throws std::length_error
// above 16 active vertices.
DensityResult brute_force_opt(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                              const WeightFunction& tau);

// Static directed 2-path density over the subgraph induced by w: the
// number of pairs (u -> v, v -> w'), u != w', in the collapsed directed
// projection, divided by |w|. Timestamps are ignored entirely. Used by
// the fixture that separates temporal from static optima.
double static_2path_density(const TemporalNetwork& t, const std::vector<VertexId>& w);

}  // namespace oracle
}  // namespace aldente
