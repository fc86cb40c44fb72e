#pragma once

// Exact enumeration of motif instances within a duration bound, the
// per-instance weighting functions, and the derived aggregates: total
// weight, per-vertex motif degrees, and density.

#include <cstdint>
#include <functional>
#include <vector>

#include "aldente/motif.hpp"
#include "aldente/tgraph.hpp"

namespace aldente {

// An instance is identified by edge positions into a specific edge
// sequence, strictly increasing by (time, tie). The vertex bijection is
// implied by the edges and never stored.
struct DeltaInstance {
    std::vector<std::uint32_t> edge_refs;
};

struct WeightFunction {
    enum class Kind { Constant, Decay };
    Kind kind = Kind::Constant;
    double lambda = 0.0;  // decay rate, 1/time units; only read for Decay

    static WeightFunction constant() { return WeightFunction{Kind::Constant, 0.0}; }
    static WeightFunction decay(double lambda) { return WeightFunction{Kind::Decay, lambda}; }
};

// Weight of an instance given its edge timestamps in arrival order.
// Constant: 1. Decay: mean over consecutive pairs of exp(-lambda * gap).
double weigh_times(const double* times, std::size_t ell, const WeightFunction& tau);
double weigh(const TemporalNetwork& t, const DeltaInstance& s, const WeightFunction& tau);

// Suggested decay rate: inverse of the mean gap between consecutive
// sorted timestamps; 1 when the network has fewer than two edges or
// zero time span.
double default_decay_lambda(const TemporalNetwork& t);

namespace detail {

// Reusable per-thread buffers for the matcher. Cleared incrementally, so
// repeated small enumerations over a large id universe stay cheap.
struct MatcherScratch {
    std::vector<std::vector<std::uint32_t>> out_edges;  // vertex -> edge positions, ascending
    std::vector<std::vector<std::uint32_t>> in_edges;
    std::vector<char> in_image;  // network vertex currently bound by the partial map
    std::vector<VertexId> touched;

    void reset(std::size_t universe);
};

// Backtracking matcher over an arbitrary time-sorted edge span. For each
// candidate first edge (scanned in sequence order) the remaining motif
// edges are matched against strictly later edges no further than delta
// past the first timestamp, keeping the partial vertex map consistent
// and injective. Instances are emitted in lexicographic edge-position
// order. edge_refs index into the given span.
void enumerate_span(const TemporalEdge* edges, std::size_t m, std::size_t universe,
                    const TemporalMotif& motif, double delta, MatcherScratch& scratch,
                    const std::function<void(const DeltaInstance&)>& visit);

}  // namespace detail

// Emits every instance of the motif in t exactly once, lexicographically
// by edge positions. edge_refs index into t.edges.
void enumerate_instances(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                         const std::function<void(const DeltaInstance&)>& visit);
std::vector<DeltaInstance> enumerate_instances(const TemporalNetwork& t, const TemporalMotif& motif,
                                               double delta);

// Sum of instance weights inside t[w].
double total_weight(const TemporalNetwork& t, const std::vector<VertexId>& w,
                    const TemporalMotif& motif, double delta, const WeightFunction& tau);

// Per-vertex weighted participation counts inside t[w]; each instance
// contributes its weight once to each of its k distinct vertices. The
// returned vector is indexed by vertex id over t.universe(), zero
// outside w.
std::vector<double> degree_vector(const TemporalNetwork& t, const std::vector<VertexId>& w,
                                  const TemporalMotif& motif, double delta,
                                  const WeightFunction& tau);

// total_weight / |w|; 0 for empty w.
double density(const TemporalNetwork& t, const std::vector<VertexId>& w, const TemporalMotif& motif,
               double delta, const WeightFunction& tau);

}  // namespace aldente
