#include "aldente/gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "aldente/common.hpp"

namespace aldente {

LayeredFixture layered_fixture(std::uint64_t n) {
    if (n == 0 || n % 12 != 0) throw std::invalid_argument("n must be a positive multiple of 12");
    const VertexId p = static_cast<VertexId>(n / 4);
    const VertexId s = static_cast<VertexId>(n / 12);
    const VertexId base = 3 * p;

    std::vector<TemporalEdge> edges;
    // Static block: later layer pairs carry the earlier timestamp, so no
    // edge pair can be traversed in time order.
    for (VertexId a = 0; a < p; ++a) {
        for (VertexId b = 0; b < p; ++b) {
            edges.push_back(TemporalEdge{a, static_cast<VertexId>(p + b), 2.0, 0});
        }
    }
    for (VertexId b = 0; b < p; ++b) {
        for (VertexId c = 0; c < p; ++c) {
            edges.push_back(TemporalEdge{static_cast<VertexId>(p + b), static_cast<VertexId>(2 * p + c), 1.0, 0});
        }
    }
    // Temporal block: the same shape with the timestamps in walking
    // order.
    for (VertexId a = 0; a < s; ++a) {
        for (VertexId b = 0; b < s; ++b) {
            edges.push_back(TemporalEdge{static_cast<VertexId>(base + a), static_cast<VertexId>(base + s + b), 1.0, 0});
        }
    }
    for (VertexId b = 0; b < s; ++b) {
        for (VertexId c = 0; c < s; ++c) {
            edges.push_back(TemporalEdge{static_cast<VertexId>(base + s + b), static_cast<VertexId>(base + 2 * s + c), 2.0, 0});
        }
    }

    LayeredFixture fx;
    fx.network = make_network(n, std::move(edges));
    for (VertexId v = 0; v < base; ++v) fx.static_block.push_back(v);
    for (VertexId v = base; v < base + 3 * s; ++v) fx.temporal_block.push_back(v);
    return fx;
}

TemporalNetwork synthetic_network(const SyntheticConfig& config) {
    std::mt19937_64 eng(splitmix64(config.seed ^ 0x5eedf00dULL));
    auto uniform = [&](double lo, double hi) {
        const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    };

    const std::uint64_t n = config.communities * config.vertices_per_community;
    std::vector<TemporalEdge> edges;
    edges.reserve(config.communities * config.edges_per_community + config.background_edges);

    for (std::uint64_t c = 0; c < config.communities; ++c) {
        const std::uint64_t lo = c * config.vertices_per_community;
        const std::uint64_t bursts = std::max<std::uint64_t>(1, config.edges_per_community / 3000);
        std::vector<double> centers(bursts);
        for (double& center : centers) center = uniform(0.0, config.span);
        for (std::uint64_t e = 0; e < config.edges_per_community; ++e) {
            const double center = centers[eng() % bursts];
            double time = center + uniform(-0.5 * config.burst_width, 0.5 * config.burst_width);
            time = std::clamp(time, 0.0, config.span);
            const VertexId src = static_cast<VertexId>(lo + eng() % config.vertices_per_community);
            VertexId dst = src;
            while (dst == src) {
                dst = static_cast<VertexId>(lo + eng() % config.vertices_per_community);
            }
            edges.push_back(TemporalEdge{src, dst, time, 0});
        }
    }
    for (std::uint64_t e = 0; e < config.background_edges; ++e) {
        const VertexId src = static_cast<VertexId>(eng() % n);
        VertexId dst = src;
        while (dst == src) {
            dst = static_cast<VertexId>(eng() % n);
        }
        edges.push_back(TemporalEdge{src, dst, uniform(0.0, config.span), 0});
    }
    return make_network(n, std::move(edges));
}

}  // namespace aldente
