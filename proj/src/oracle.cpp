#include "aldente/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace aldente {
namespace oracle {

namespace {

constexpr std::uint32_t kUnmapped = 0xffffffffu;

// Checks whether the chosen edge positions, in order, realize the motif
// under some injective vertex map. Rebuilt from scratch per candidate;
// no sharing with the production matcher beyond the definition itself.
bool realizes_motif(const TemporalNetwork& t, const TemporalMotif& motif,
                    const std::vector<std::uint32_t>& picks) {
    std::vector<std::uint32_t> map(motif.k, kUnmapped);
    std::vector<char> used(t.universe(), 0);
    for (std::uint32_t j = 0; j < motif.ell; ++j) {
        const TemporalEdge& e = t.edges[picks[j]];
        const auto [a, b] = motif.edges[j];
        const VertexId ends[2] = {e.src, e.dst};
        const std::uint32_t slots[2] = {a, b};
        for (int side = 0; side < 2; ++side) {
            if (map[slots[side]] == kUnmapped) {
                if (used[ends[side]]) return false;
                map[slots[side]] = ends[side];
                used[ends[side]] = 1;
            } else if (map[slots[side]] != ends[side]) {
                return false;
            }
        }
    }
    return true;
}

void combinations(std::size_t m, std::uint32_t ell, std::vector<std::uint32_t>& picks,
                  std::uint32_t next, const std::function<void()>& done) {
    if (picks.size() == ell) {
        done();
        return;
    }
    for (std::uint32_t p = next; p + (ell - picks.size()) <= m; ++p) {
        picks.push_back(p);
        combinations(m, ell, picks, p + 1, done);
        picks.pop_back();
    }
}

double naive_tau(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                 const WeightFunction& tau) {
    double total = 0.0;
    std::vector<std::uint32_t> picks;
    combinations(t.edges.size(), motif.ell, picks, 0, [&] {
        if (t.edges[picks.back()].time - t.edges[picks.front()].time > delta) return;
        if (!realizes_motif(t, motif, picks)) return;
        DeltaInstance s{picks};
        total += weigh(t, s, tau);
    });
    return total;
}

}  // namespace

std::vector<DeltaInstance> brute_force_instances(const TemporalNetwork& t,
                                                 const TemporalMotif& motif, double delta) {
    if (t.edge_count() > 14) {
        throw std::length_error("brute_force_instances is capped at 14 edges");
    }
    std::vector<DeltaInstance> all;
    std::vector<std::uint32_t> picks;
    combinations(t.edges.size(), motif.ell, picks, 0, [&] {
        if (t.edges[picks.back()].time - t.edges[picks.front()].time > delta) return;
        if (!realizes_motif(t, motif, picks)) return;
        all.push_back(DeltaInstance{picks});
    });
    return all;
}

DensityResult brute_force_opt(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                              const WeightFunction& tau) {
    const std::size_t n = t.vertex_count();
    if (n > 16) throw std::length_error("brute_force_opt is capped at 16 vertices");

    DensityResult best;
    std::vector<VertexId> subset;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        subset.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1ULL << i)) subset.push_back(t.vertices[i]);
        }
        const TemporalNetwork sub = induced_subnetwork(t, subset);
        const double total = naive_tau(sub, motif, delta, tau);
        const double rho = total / static_cast<double>(subset.size());
        if (rho > best.density || (rho == best.density && !best.vertices.empty() && subset < best.vertices)) {
            best.vertices = subset;
            best.density = rho;
            best.tau = total;
        }
    }
    if (best.tau == 0.0) return DensityResult{};
    return best;
}

double static_2path_density(const TemporalNetwork& t, const std::vector<VertexId>& w) {
    if (w.empty()) return 0.0;
    const TemporalNetwork sub = induced_subnetwork(t, w);
    const StaticProjection proj = static_projection(sub, true);
    std::vector<std::uint64_t> indeg(t.universe(), 0);
    std::vector<std::uint64_t> outdeg(t.universe(), 0);
    std::uint64_t reciprocal_pairs = 0;
    for (auto [a, b] : proj.edges) {
        if (a == b) continue;
        ++outdeg[a];
        ++indeg[b];
        if (std::binary_search(proj.edges.begin(), proj.edges.end(), std::make_pair(b, a))) {
            ++reciprocal_pairs;
        }
    }
    std::uint64_t paths = 0;
    for (VertexId v : sub.vertices) {
        paths += indeg[v] * outdeg[v];
    }
    // Each mutual edge pair u<->v yields one excluded pattern at each of
    // its two centers, and reciprocal_pairs counted each mutual pair
    // twice (once per direction), so the totals align.
    paths -= reciprocal_pairs;
    return static_cast<double>(paths) / static_cast<double>(w.size());
}

}  // namespace oracle
}  // namespace aldente
