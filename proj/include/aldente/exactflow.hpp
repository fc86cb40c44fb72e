#pragma once

// Exact densest-subnetwork solver: binary search over the density value
// with one s-z min-cut per step on a flow network built from the
// catalog. The source feeds each catalog entry its weight, entries fan
// out to their member vertices with effectively infinite capacity, and
// every vertex drains to the sink at the candidate density.

#include <cstdint>
#include <vector>

#include "aldente/kcis.hpp"
#include "aldente/result.hpp"

namespace aldente {

class FlowNetwork {
public:
    // Layout: node 0 = source, node 1 = sink, then one node per catalog
    // entry, then one node per active vertex. Entry-to-member arcs get
    // capacity (total entry weight + 1), exceeding any finite cut.
    FlowNetwork(const KcisCatalog& catalog, const std::vector<VertexId>& active);

    // Recomputes an exact min cut for sink-arc capacity zeta and returns
    // the active vertices on the source side. Runs a fresh blocking-flow
    // max-flow each call.
    std::vector<VertexId> min_cut_source_side(double zeta);

    std::size_t node_count() const { return level_.size(); }
    std::size_t arc_count() const { return arcs_.size() / 2; }  // forward arcs only
    double last_flow_value() const { return last_flow_; }

private:
    struct Arc {
        std::uint32_t to;
        double cap;
        double flow;
    };

    bool bfs_levels();
    double dfs_push(std::uint32_t v, double limit);

    std::vector<Arc> arcs_;                    // forward at 2i, reverse at 2i+1
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<int> level_;
    std::vector<std::uint32_t> iter_;
    std::vector<std::uint32_t> sink_arcs_;     // forward arc index per active vertex
    std::vector<VertexId> vertex_of_node_;     // node index -> vertex id (vertex nodes only)
    std::size_t first_vertex_node_ = 0;
    double residual_eps_ = 1e-12;
    double last_flow_ = 0.0;
};

// Full exact solve: returns the maximum-density vertex set, its exact
// density recomputed from scratch, and the bisection iteration count.
// (Empty set, 0) when the network hosts no instance.
DensityResult solve_exact(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                          const WeightFunction& tau);

}  // namespace aldente
