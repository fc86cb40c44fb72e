#include "aldente/randpeel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "aldente/common.hpp"
#include "aldente/match.hpp"

namespace aldente {

namespace {

void fill_exact(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                const WeightFunction& tau, DensityResult& r) {
    r.tau = total_weight(t, r.vertices, motif, delta, tau);
    r.density = r.vertices.empty() ? 0.0 : r.tau / static_cast<double>(r.vertices.size());
}

}  // namespace

RandPeelOutput prob_peel(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                         const WeightFunction& tau, const RandPeelConfig& config) {
    if (!(config.xi > 0.0)) throw std::invalid_argument("xi must be positive");

    RandPeelOutput out;
    std::vector<VertexId> alive = t.vertices;
    std::vector<VertexId> best_set;
    double best_est = -std::numeric_limits<double>::infinity();
    std::size_t best_snapshot = 0;
    bool capped = false;

    while (!alive.empty()) {
        check_deadline();
        ++out.iterations;
        const TemporalNetwork sub = induced_subnetwork(t, alive);
        SampleConfig sc = config.sample;
        sc.eta = config.sample.eta / std::exp2(static_cast<double>(out.iterations));
        const EstimateOutput est = get_estimates(sub, motif, delta, tau, sc, out.iterations);
        out.total_samples += est.samples;
        capped = capped || est.capped;

        const double tau_hat = est.tau_estimate;
        const double rho_hat = tau_hat / static_cast<double>(alive.size());
        out.trace.snapshots.push_back({alive.size(), tau_hat, rho_hat});
        if (tau_hat > 0.0 && rho_hat > best_est) {
            best_est = rho_hat;
            best_set = alive;
            best_snapshot = out.trace.snapshots.size() - 1;
        }
        const double threshold = motif.k * (1.0 + config.xi) * rho_hat;
        std::vector<VertexId> keep;
        std::vector<VertexId> peeled;
        keep.reserve(alive.size());
        for (VertexId v : alive) {
            if (est.degree_estimate[v] > threshold) {
                keep.push_back(v);
            } else {
                peeled.push_back(v);
            }
        }
        out.trace.batches.push_back(std::move(peeled));
        alive = std::move(keep);
    }

    out.trace.snapshots.push_back({0, 0.0, 0.0});
    if (best_set.empty()) {
        out.trace.argmax = out.trace.snapshots.size() - 1;
    } else {
        out.trace.argmax = best_snapshot;
        out.result.vertices = std::move(best_set);
        out.result.estimated_density = best_est;
        fill_exact(t, motif, delta, tau, out.result);
    }
    out.result.iterations = out.iterations;
    out.result.best_effort = capped;
    return out;
}

RandPeelOutput hybrid_peel(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                           const WeightFunction& tau, const RandPeelConfig& config) {
    if (!(config.xi > 0.0)) throw std::invalid_argument("xi must be positive");
    const unsigned J = config.J.value_or(t.edge_count() >= 10'000'000 ? 3u : 2u);

    RandPeelOutput out;
    std::vector<VertexId> alive = t.vertices;
    std::vector<std::vector<VertexId>> cand_sets;
    std::vector<double> cand_est;
    std::vector<std::size_t> cand_snapshot;
    bool capped = false;

    for (unsigned i = 1; i <= J && !alive.empty(); ++i) {
        check_deadline();
        ++out.iterations;
        const TemporalNetwork sub = induced_subnetwork(t, alive);
        SampleConfig sc = config.sample;
        sc.eta = config.sample.eta / static_cast<double>(J);
        const EstimateOutput est = get_estimates(sub, motif, delta, tau, sc, i);
        out.total_samples += est.samples;
        capped = capped || est.capped;

        const double tau_hat = est.tau_estimate;
        const double rho_hat = tau_hat / static_cast<double>(alive.size());
        out.trace.snapshots.push_back({alive.size(), tau_hat, rho_hat});
        if (tau_hat > 0.0) {
            cand_sets.push_back(alive);
            cand_est.push_back(rho_hat);
            cand_snapshot.push_back(out.trace.snapshots.size() - 1);
        }
        const double threshold = motif.k * (1.0 + config.xi) * rho_hat;
        std::vector<VertexId> keep;
        std::vector<VertexId> peeled;
        keep.reserve(alive.size());
        for (VertexId v : alive) {
            if (est.degree_estimate[v] > threshold) {
                keep.push_back(v);
            } else {
                peeled.push_back(v);
            }
        }
        out.trace.batches.push_back(std::move(peeled));
        alive = std::move(keep);
    }

    const TemporalNetwork survivors = induced_subnetwork(t, alive);
    const PeelOutput exact_phase = greedy_peel(survivors, motif, delta, tau);
    out.trace.snapshots.push_back(exact_phase.trace.snapshots.front());
    out.trace.argmax = out.trace.snapshots.size() - 1;

    std::size_t best_cand = cand_sets.size();
    double best_est = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < cand_sets.size(); ++c) {
        if (cand_est[c] > best_est) {
            best_est = cand_est[c];
            best_cand = c;
        }
    }
    if (best_cand == cand_sets.size() || exact_phase.result.density >= best_est) {
        out.result = exact_phase.result;
        out.result.estimated_density = std::nan("");
    } else {
        out.trace.argmax = cand_snapshot[best_cand];
        out.result.vertices = std::move(cand_sets[best_cand]);
        out.result.estimated_density = best_est;
        fill_exact(t, motif, delta, tau, out.result);
    }
    out.result.iterations = out.iterations;
    out.result.best_effort = capped;
    return out;
}

}  // namespace aldente
