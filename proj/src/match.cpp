#include "aldente/match.hpp"

#include <algorithm>
#include <cmath>

namespace aldente {

double weigh_times(const double* times, std::size_t ell, const WeightFunction& tau) {
    if (tau.kind == WeightFunction::Kind::Constant || ell < 2) return 1.0;
    double sum = 0.0;
    for (std::size_t j = 1; j < ell; ++j) {
        sum += std::exp(-tau.lambda * (times[j] - times[j - 1]));
    }
    return sum / static_cast<double>(ell - 1);
}

double weigh(const TemporalNetwork& t, const DeltaInstance& s, const WeightFunction& tau) {
    if (tau.kind == WeightFunction::Kind::Constant) return 1.0;
    double times[64];
    const std::size_t ell = s.edge_refs.size();
    double* buf = times;
    std::vector<double> heap_buf;
    if (ell > 64) {
        heap_buf.resize(ell);
        buf = heap_buf.data();
    }
    for (std::size_t j = 0; j < ell; ++j) buf[j] = t.edges[s.edge_refs[j]].time;
    return weigh_times(buf, ell, tau);
}

double default_decay_lambda(const TemporalNetwork& t) {
    if (t.edge_count() < 2) return 1.0;
    const double span = t.t_max() - t.t_min();
    if (span <= 0.0) return 1.0;
    return static_cast<double>(t.edge_count() - 1) / span;
}

namespace detail {

void MatcherScratch::reset(std::size_t universe) {
    if (out_edges.size() < universe) {
        out_edges.resize(universe);
        in_edges.resize(universe);
        in_image.resize(universe, 0);
    }
    for (VertexId v : touched) {
        out_edges[v].clear();
        in_edges[v].clear();
    }
    touched.clear();
}

namespace {

constexpr std::uint32_t kUnmapped = 0xffffffffu;

struct SpanMatcher {
    const TemporalEdge* edges;
    const TemporalMotif* motif;
    double delta;
    MatcherScratch* scratch;
    const std::function<void(const DeltaInstance&)>* visit;

    std::uint32_t map[16];  // motif vertex -> network vertex
    DeltaInstance out;
    std::uint32_t window_end = 0;
    double anchor_time = 0.0;

    // Position of the first list element strictly after prev.
    static std::uint32_t first_after(const std::vector<std::uint32_t>& list, std::uint32_t prev) {
        return static_cast<std::uint32_t>(
            std::upper_bound(list.begin(), list.end(), prev) - list.begin());
    }

    void bind(std::uint32_t mv, VertexId nv) {
        map[mv] = nv;
        scratch->in_image[nv] = 1;
    }

    void unbind(std::uint32_t mv) {
        scratch->in_image[map[mv]] = 0;
        map[mv] = kUnmapped;
    }

    void descend(std::uint32_t level, std::uint32_t pos) {
        out.edge_refs[level] = pos;
        if (level + 1 == motif->ell) {
            (*visit)(out);
        } else {
            extend(level + 1, pos);
        }
    }

    void try_edge(std::uint32_t level, std::uint32_t pos) {
        const TemporalEdge& e = edges[pos];
        const auto [a, b] = motif->edges[level];
        const std::uint32_t ha = map[a];
        const std::uint32_t hb = map[b];
        if (ha != kUnmapped) {
            if (e.src != ha) return;
        } else if (scratch->in_image[e.src]) {
            return;
        }
        if (hb != kUnmapped) {
            if (e.dst != hb) return;
        } else if (a == b) {
            // Motif self-loop with the vertex still free: the network
            // edge must be a self-loop onto a free vertex.
            if (e.dst != e.src) return;
        } else if (scratch->in_image[e.dst] || (ha == kUnmapped && e.dst == e.src)) {
            return;
        }
        const bool bound_a = ha == kUnmapped;
        if (bound_a) bind(a, e.src);
        const bool bound_b = map[b] == kUnmapped;
        if (bound_b) bind(b, e.dst);
        descend(level, pos);
        if (bound_b) unbind(b);
        if (bound_a) unbind(a);
    }

    // Matches motif edge `level` against positions strictly after prev
    // and inside the anchor window, narrowest candidate list first.
    void extend(std::uint32_t level, std::uint32_t prev) {
        const auto [a, b] = motif->edges[level];
        const std::uint32_t ha = map[a];
        const std::uint32_t hb = map[b];
        if (ha != kUnmapped) {
            const auto& list = scratch->out_edges[ha];
            for (std::uint32_t i = first_after(list, prev); i < list.size(); ++i) {
                const std::uint32_t pos = list[i];
                if (pos >= window_end) break;
                try_edge(level, pos);
            }
        } else if (hb != kUnmapped) {
            const auto& list = scratch->in_edges[hb];
            for (std::uint32_t i = first_after(list, prev); i < list.size(); ++i) {
                const std::uint32_t pos = list[i];
                if (pos >= window_end) break;
                try_edge(level, pos);
            }
        } else {
            // Both endpoints free: nothing narrows the scan.
            for (std::uint32_t pos = prev + 1; pos < window_end; ++pos) {
                try_edge(level, pos);
            }
        }
    }

    void run(std::size_t m) {
        const std::uint32_t ell = motif->ell;
        out.edge_refs.assign(ell, 0);
        std::fill(map, map + motif->k, kUnmapped);
        for (std::uint32_t i = 0; i + ell <= m; ++i) {
            anchor_time = edges[i].time;
            const TemporalEdge* lo = edges + i;
            const TemporalEdge* hi = edges + m;
            window_end = static_cast<std::uint32_t>(
                std::upper_bound(lo, hi, anchor_time + delta,
                                 [](double t, const TemporalEdge& e) { return t < e.time; }) -
                edges);
            if (window_end - i < ell) continue;
            const auto [a, b] = motif->edges[0];
            const TemporalEdge& e = edges[i];
            if (a == b) {
                if (e.src != e.dst) continue;
                bind(a, e.src);
            } else {
                if (e.src == e.dst) continue;
                bind(a, e.src);
                bind(b, e.dst);
            }
            descend(0, i);
            unbind(a);
            if (a != b) unbind(b);
        }
    }
};

}  // namespace

void enumerate_span(const TemporalEdge* edges, std::size_t m, std::size_t universe,
                    const TemporalMotif& motif, double delta, MatcherScratch& scratch,
                    const std::function<void(const DeltaInstance&)>& visit) {
    if (m < motif.ell || motif.k > 16) {
        if (motif.k > 16) throw std::invalid_argument("motif has more than 16 vertices");
        return;
    }
    scratch.reset(universe);
    for (std::uint32_t pos = 0; pos < m; ++pos) {
        const TemporalEdge& e = edges[pos];
        if (scratch.out_edges[e.src].empty() && scratch.in_edges[e.src].empty()) {
            scratch.touched.push_back(e.src);
        }
        scratch.out_edges[e.src].push_back(pos);
        if (e.dst != e.src && scratch.out_edges[e.dst].empty() && scratch.in_edges[e.dst].empty()) {
            scratch.touched.push_back(e.dst);
        }
        scratch.in_edges[e.dst].push_back(pos);
    }
    SpanMatcher matcher{edges, &motif, delta, &scratch, &visit, {}, {}};
    matcher.run(m);
}

}  // namespace detail

void enumerate_instances(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                         const std::function<void(const DeltaInstance&)>& visit) {
    static thread_local detail::MatcherScratch scratch;
    detail::enumerate_span(t.edges.data(), t.edges.size(), t.universe(), motif, delta, scratch, visit);
}

std::vector<DeltaInstance> enumerate_instances(const TemporalNetwork& t, const TemporalMotif& motif,
                                               double delta) {
    std::vector<DeltaInstance> all;
    enumerate_instances(t, motif, delta, [&](const DeltaInstance& s) { all.push_back(s); });
    return all;
}

double total_weight(const TemporalNetwork& t, const std::vector<VertexId>& w,
                    const TemporalMotif& motif, double delta, const WeightFunction& tau) {
    const TemporalNetwork sub = induced_subnetwork(t, w);
    double total = 0.0;
    enumerate_instances(sub, motif, delta,
                        [&](const DeltaInstance& s) { total += weigh(sub, s, tau); });
    return total;
}

std::vector<double> degree_vector(const TemporalNetwork& t, const std::vector<VertexId>& w,
                                  const TemporalMotif& motif, double delta,
                                  const WeightFunction& tau) {
    const TemporalNetwork sub = induced_subnetwork(t, w);
    std::vector<double> deg(t.universe(), 0.0);
    std::vector<VertexId> verts;
    enumerate_instances(sub, motif, delta, [&](const DeltaInstance& s) {
        const double wgt = weigh(sub, s, tau);
        verts.clear();
        for (std::uint32_t ref : s.edge_refs) {
            verts.push_back(sub.edges[ref].src);
            verts.push_back(sub.edges[ref].dst);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (VertexId v : verts) deg[v] += wgt;
    });
    return deg;
}

double density(const TemporalNetwork& t, const std::vector<VertexId>& w, const TemporalMotif& motif,
               double delta, const WeightFunction& tau) {
    if (w.empty()) return 0.0;
    return total_weight(t, w, motif, delta, tau) / static_cast<double>(w.size());
}

}  // namespace aldente
