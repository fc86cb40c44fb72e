#include "aldente/exactflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "aldente/common.hpp"

namespace aldente {

namespace {

constexpr std::uint32_t kSource = 0;
constexpr std::uint32_t kSink = 1;

}  // namespace

FlowNetwork::FlowNetwork(const KcisCatalog& catalog, const std::vector<VertexId>& active) {
    const std::size_t entries = catalog.entries().size();
    first_vertex_node_ = 2 + entries;
    const std::size_t nodes = first_vertex_node_ + active.size();
    adj_.resize(nodes);
    level_.resize(nodes);
    iter_.resize(nodes);
    vertex_of_node_ = active;

    std::vector<std::uint32_t> node_of_vertex;
    if (!active.empty()) {
        node_of_vertex.resize(*std::max_element(active.begin(), active.end()) + 1);
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
        node_of_vertex[active[i]] = static_cast<std::uint32_t>(first_vertex_node_ + i);
    }

    auto add_arc = [&](std::uint32_t from, std::uint32_t to, double cap) {
        const std::uint32_t idx = static_cast<std::uint32_t>(arcs_.size());
        arcs_.push_back(Arc{to, cap, 0.0});
        arcs_.push_back(Arc{from, 0.0, 0.0});
        adj_[from].push_back(idx);
        adj_[to].push_back(idx + 1);
        return idx;
    };

    const double member_cap = catalog.total_weight() + 1.0;
    for (std::size_t e = 0; e < entries; ++e) {
        const KcisEntry& entry = catalog.entries()[e];
        const std::uint32_t enode = static_cast<std::uint32_t>(2 + e);
        add_arc(kSource, enode, entry.weight);
        for (VertexId v : entry.verts) {
            add_arc(enode, node_of_vertex[v], member_cap);
        }
    }
    sink_arcs_.reserve(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
        sink_arcs_.push_back(add_arc(static_cast<std::uint32_t>(first_vertex_node_ + i), kSink, 0.0));
    }
    residual_eps_ = 1e-9 * (1.0 + member_cap);
}

bool FlowNetwork::bfs_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::uint32_t> q;
    level_[kSource] = 0;
    q.push(kSource);
    while (!q.empty()) {
        const std::uint32_t v = q.front();
        q.pop();
        for (std::uint32_t idx : adj_[v]) {
            const Arc& a = arcs_[idx];
            if (level_[a.to] < 0 && a.cap - a.flow > residual_eps_) {
                level_[a.to] = level_[v] + 1;
                q.push(a.to);
            }
        }
    }
    return level_[kSink] >= 0;
}

double FlowNetwork::dfs_push(std::uint32_t v, double limit) {
    if (v == kSink) return limit;
    for (; iter_[v] < adj_[v].size(); ++iter_[v]) {
        const std::uint32_t idx = adj_[v][iter_[v]];
        Arc& a = arcs_[idx];
        const double residual = a.cap - a.flow;
        if (level_[a.to] != level_[v] + 1 || residual <= residual_eps_) continue;
        const double pushed = dfs_push(a.to, std::min(limit, residual));
        if (pushed > 0.0) {
            a.flow += pushed;
            arcs_[idx ^ 1].flow -= pushed;
            return pushed;
        }
    }
    return 0.0;
}

std::vector<VertexId> FlowNetwork::min_cut_source_side(double zeta) {
    for (Arc& a : arcs_) a.flow = 0.0;
    for (std::uint32_t idx : sink_arcs_) arcs_[idx].cap = zeta;

    last_flow_ = 0.0;
    while (bfs_levels()) {
        std::fill(iter_.begin(), iter_.end(), 0u);
        double pushed;
        while ((pushed = dfs_push(kSource, std::numeric_limits<double>::infinity())) > 0.0) {
            last_flow_ += pushed;
        }
        check_deadline();
    }

    // Source side of the cut: residual reachability from s. bfs_levels
    // already left exactly that in level_ when it returned false.
    std::vector<VertexId> side;
    for (std::size_t i = 0; i < vertex_of_node_.size(); ++i) {
        if (level_[first_vertex_node_ + i] >= 0) side.push_back(vertex_of_node_[i]);
    }
    return side;
}

DensityResult solve_exact(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                          const WeightFunction& tau) {
    const KcisCatalog catalog = KcisCatalog::build(t, motif, delta, tau);
    DensityResult best;
    if (catalog.empty()) return best;

    const std::vector<VertexId>& active = t.vertices;
    const double n = static_cast<double>(active.size());
    FlowNetwork flow(catalog, active);

    double lo = 0.0;
    double hi = catalog.total_weight();
    const double gap = catalog.min_instance_weight() / (n * (n - 1.0));
    std::vector<VertexId> current = active;
    std::size_t iterations = 0;
    while (hi - lo >= gap) {
        check_deadline();
        const double zeta = 0.5 * (lo + hi);
        std::vector<VertexId> side = flow.min_cut_source_side(zeta);
        if (side.empty()) {
            hi = zeta;
        } else {
            lo = zeta;
            current = std::move(side);
        }
        ++iterations;
    }

    best.vertices = std::move(current);
    std::sort(best.vertices.begin(), best.vertices.end());
    best.tau = total_weight(t, best.vertices, motif, delta, tau);
    best.density = best.tau / static_cast<double>(best.vertices.size());
    best.iterations = iterations;
    return best;
}

}  // namespace aldente
