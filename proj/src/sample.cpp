#include "aldente/sample.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "aldente/common.hpp"

namespace aldente {

std::uint64_t get_bound(std::uint64_t n, double span, double q, double delta, double epsilon,
                        double eta_prime) {
    if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(eta_prime > 0.0)) throw std::invalid_argument("failure budget must be positive");
    if (n == 0) return 1;
    const double stretched = span + q * delta;
    const double lead = stretched / ((q - 1.0) * delta) - 1.0;
    if (lead <= 0.0) return 1;
    const double concentration = 1.0 / ((1.0 + epsilon) * std::log1p(epsilon) - epsilon);
    const double tail = std::log(2.0 * static_cast<double>(n) / eta_prime);
    const double r = lead * concentration * tail;
    if (r <= 1.0) return 1;
    return static_cast<std::uint64_t>(std::ceil(r));
}

namespace detail {

void sample_window_into(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                        const WeightFunction& tau, double q, std::uint64_t sample_seed,
                        MatcherScratch& scratch, std::vector<double>& accum) {
    const double width = q * delta;
    const double lo_bound = t.t_min() - width;
    const double stretched = (t.t_max() - t.t_min()) + width;

    std::mt19937_64 eng(sample_seed);
    // Uniform double in [0, 1) built from the top 53 bits, identical on
    // every platform.
    const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    const double a = lo_bound + u * stretched;
    const double b = a + width;

    const auto begin = t.edges.begin();
    const auto end = t.edges.end();
    const auto first = std::lower_bound(begin, end, a, [](const TemporalEdge& e, double v) {
        return e.time < v;
    });
    const auto last = std::upper_bound(first, end, b, [](double v, const TemporalEdge& e) {
        return v < e.time;
    });
    const std::size_t m = static_cast<std::size_t>(last - first);
    if (m < motif.ell) return;

    std::vector<VertexId> verts;
    std::vector<double> times;
    enumerate_span(&*first, m, t.universe(), motif, delta, scratch, [&](const DeltaInstance& s) {
        const double t_first = first[s.edge_refs.front()].time;
        const double t_last = first[s.edge_refs.back()].time;
        const double p = (width - (t_last - t_first)) / stretched;
        double wgt;
        if (tau.kind == WeightFunction::Kind::Constant) {
            wgt = 1.0;
        } else {
            times.clear();
            for (std::uint32_t ref : s.edge_refs) times.push_back(first[ref].time);
            wgt = weigh_times(times.data(), times.size(), tau);
        }
        const double contribution = wgt / p;
        verts.clear();
        for (std::uint32_t ref : s.edge_refs) {
            verts.push_back(first[ref].src);
            verts.push_back(first[ref].dst);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (VertexId v : verts) accum[v] += contribution;
    });
}

}  // namespace detail

EstimateOutput get_estimates(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                             const WeightFunction& tau, const SampleConfig& config,
                             std::uint64_t stream) {
    EstimateOutput out;
    out.degree_estimate.assign(t.universe(), 0.0);
    if (t.edge_count() < motif.ell || t.vertex_count() == 0) return out;

    const double span = t.t_max() - t.t_min();
    const std::uint64_t analytic =
        get_bound(t.vertex_count(), span, config.q, delta, config.epsilon, config.eta);
    std::uint64_t r = analytic;
    if (config.samples) {
        r = *config.samples;
        if (r == 0) throw std::invalid_argument("sample count must be positive");
    } else if (config.max_samples) {
        if (*config.max_samples == 0) throw std::invalid_argument("sample cap must be positive");
        r = std::min(r, *config.max_samples);
    }
    out.capped = r < analytic;
    out.samples = r;

    const unsigned workers = std::max(1u, std::min<unsigned>(
        config.threads, static_cast<unsigned>(std::min<std::uint64_t>(r, 256))));

    std::vector<std::vector<double>> partial(workers);
    std::atomic<bool> timed_out{false};
    auto worker = [&](unsigned w) {
        partial[w].assign(t.universe(), 0.0);
        detail::MatcherScratch scratch;
        std::size_t since_poll = 0;
        for (std::uint64_t i = w; i < r; i += workers) {
            if (timed_out.load(std::memory_order_relaxed)) return;
            detail::sample_window_into(t, motif, delta, tau, config.q,
                                       mix_seed(config.seed, stream, i), scratch, partial[w]);
            if (++since_poll >= 64) {
                since_poll = 0;
                try {
                    check_deadline();
                } catch (const TimeoutExceeded&) {
                    timed_out.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    };

    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
        for (std::thread& th : pool) th.join();
    }
    if (timed_out.load()) throw TimeoutExceeded();

    const double inv_r = 1.0 / static_cast<double>(r);
    for (unsigned w = 0; w < workers; ++w) {
        for (std::size_t v = 0; v < partial[w].size(); ++v) {
            out.degree_estimate[v] += partial[w][v];
        }
    }
    double sum = 0.0;
    for (double& d : out.degree_estimate) {
        d *= inv_r;
        sum += d;
    }
    out.tau_estimate = sum / static_cast<double>(motif.k);
    return out;
}

}  // namespace aldente
