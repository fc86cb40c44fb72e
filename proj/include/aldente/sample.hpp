#pragma once

// Window sampling for motif-degree estimation. A sample draws a uniform
// window position, enumerates instances inside the stretched window, and
// reweights each one by the inverse probability that a uniform window
// contains it. Averaging over r samples gives an unbiased estimate of
// every vertex's motif degree simultaneously.

#include <cstdint>
#include <optional>
#include <vector>

#include "aldente/match.hpp"
#include "aldente/tgraph.hpp"

namespace aldente {

struct SampleConfig {
    double q = 1.25;       // window stretch factor, must be > 1
    double epsilon = 0.1;  // relative error target
    double eta = 0.1;      // failure probability budget
    std::optional<std::uint64_t> samples;      // overrides the analytic sample count entirely
    std::optional<std::uint64_t> max_samples;  // caps the analytic count; capped runs lose the guarantee
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

// Sample count sufficient for (epsilon, eta_prime) concentration of all
// n per-vertex estimates at once. span = t_max - t_min of the network
// being sampled. Never returns 0; when the window already covers the
// whole span a single sample is exact.
std::uint64_t get_bound(std::uint64_t n, double span, double q, double delta, double epsilon,
                        double eta_prime);

struct EstimateOutput {
    std::vector<double> degree_estimate;  // indexed by vertex id over t.universe()
    double tau_estimate = 0.0;            // instance-weight estimate for the whole set
    std::uint64_t samples = 0;
    // True when an override or cap ran fewer samples than the analytic
    // bound asked for, voiding the concentration guarantee.
    bool capped = false;
};

// Runs r window samples (r from config.samples, config.max_samples, or
// get_bound) and returns the averaged per-vertex estimates. stream seeds
// each sample as mix_seed(seed, stream, sample_index), so the drawn
// windows do not depend on the thread count; only the floating-point
// summation order does. Single-threaded runs with one seed are
// bit-for-bit reproducible.
EstimateOutput get_estimates(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                             const WeightFunction& tau, const SampleConfig& config,
                             std::uint64_t stream);

namespace detail {

// Single window sample: places a window of width q*delta uniformly over
// [t_min - q*delta, t_max], enumerates instances fully inside it, and
// adds tau(S)/p_S to each member vertex of each instance. p_S is the
// probability that such a window contains S. Exposed for the unbiasedness
// tests.
void sample_window_into(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                        const WeightFunction& tau, double q, std::uint64_t sample_seed,
                        MatcherScratch& scratch, std::vector<double>& accum);

}  // namespace detail

}  // namespace aldente
