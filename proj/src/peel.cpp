#include "aldente/peel.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "aldente/common.hpp"

namespace aldente {

namespace {

void finalize_result(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                     const WeightFunction& tau, PeelOutput& out) {
    const PeelTrace& trace = out.trace;
    out.result.vertices = trace_set_at(t.vertices, trace, trace.argmax);
    out.result.tau = total_weight(t, out.result.vertices, motif, delta, tau);
    out.result.density = out.result.vertices.empty()
                             ? 0.0
                             : out.result.tau / static_cast<double>(out.result.vertices.size());
}

PeelSnapshot snapshot_of(std::size_t size, double tau_live) {
    PeelSnapshot s;
    s.size = size;
    s.tau = tau_live;
    s.density = size == 0 ? 0.0 : tau_live / static_cast<double>(size);
    return s;
}

}  // namespace

PeelOutput greedy_peel(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                       const WeightFunction& tau) {
    KcisCatalog catalog = KcisCatalog::build(t, motif, delta, tau);
    const std::size_t n = t.vertex_count();
    const std::uint32_t k = motif.k;

    PeelOutput out;
    out.trace.snapshots.push_back(snapshot_of(n, catalog.live_weight()));

    // Min-heap of (degree, vertex) with lazy invalidation: stale pairs
    // are skipped when popped.
    using HeapItem = std::pair<double, VertexId>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
    for (VertexId v : t.vertices) heap.emplace(catalog.degree(v), v);

    std::vector<VertexId> touched;
    std::size_t alive = n;
    std::size_t steps = 0;
    while (alive > k) {
        while (true) {
            const auto [deg, v] = heap.top();
            if (!catalog.removed(v) && deg == catalog.degree(v)) break;
            heap.pop();
        }
        const VertexId victim = heap.top().second;
        heap.pop();
        touched.clear();
        catalog.remove_vertex(victim, &touched);
        for (VertexId u : touched) heap.emplace(catalog.degree(u), u);
        --alive;
        out.trace.batches.push_back({victim});
        out.trace.snapshots.push_back(snapshot_of(alive, catalog.live_weight()));
        if (++steps % 1024 == 0) check_deadline();
    }

    out.trace.argmax = 0;
    for (std::size_t i = 1; i < out.trace.snapshots.size(); ++i) {
        if (out.trace.snapshots[i].density > out.trace.snapshots[out.trace.argmax].density) {
            out.trace.argmax = i;
        }
    }
    out.result.iterations = out.trace.batches.size();
    finalize_result(t, motif, delta, tau, out);
    return out;
}

PeelOutput batch_peel(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                      const WeightFunction& tau, double xi) {
    if (!(xi > 0.0)) throw std::invalid_argument("xi must be positive");
    KcisCatalog catalog = KcisCatalog::build(t, motif, delta, tau);
    const std::uint32_t k = motif.k;

    PeelOutput out;
    std::vector<VertexId> alive = t.vertices;
    out.trace.snapshots.push_back(snapshot_of(alive.size(), catalog.live_weight()));
    out.trace.argmax = 0;

    while (!alive.empty()) {
        check_deadline();
        const double threshold =
            k * (1.0 + xi) * catalog.live_weight() / static_cast<double>(alive.size());
        std::vector<VertexId> keep;
        std::vector<VertexId> peeled;
        keep.reserve(alive.size());
        for (VertexId v : alive) {
            if (catalog.degree(v) <= threshold) {
                peeled.push_back(v);
            } else {
                keep.push_back(v);
            }
        }
        for (VertexId v : peeled) catalog.remove_vertex(v);
        alive = std::move(keep);
        out.trace.batches.push_back(std::move(peeled));
        out.trace.snapshots.push_back(snapshot_of(alive.size(), catalog.live_weight()));
        const std::size_t last = out.trace.snapshots.size() - 1;
        if (out.trace.snapshots[last].density >= out.trace.snapshots[out.trace.argmax].density) {
            out.trace.argmax = last;
        }
    }

    out.result.iterations = out.trace.batches.size();
    finalize_result(t, motif, delta, tau, out);
    return out;
}

}  // namespace aldente
