#pragma once

// Temporal network storage and basic projections. A network is an
// immutable time-sorted edge sequence over densely remapped vertex ids;
// induced subnetworks share the parent's id space so vertex sets stay
// comparable across derived networks.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aldente/common.hpp"

namespace aldente {

struct TemporalEdge {
    VertexId src = 0;
    VertexId dst = 0;
    double time = 0.0;
    std::uint32_t tie = 0;  // rank after the stable sort; (time, tie) is a strict total order
};

struct TemporalNetwork {
    // Sorted ascending by (time, tie).
    std::vector<TemporalEdge> edges;
    // Active vertex set, sorted ascending. Equals 0..n-1 for freshly
    // loaded networks; a subset of the parent's ids for induced ones.
    std::vector<VertexId> vertices;
    // Internal id -> original label, covering the whole id universe
    // (shared unchanged by induced subnetworks).
    std::vector<std::string> labels;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }
    // Id-universe size; arrays indexed by VertexId are sized by this.
    std::size_t universe() const { return labels.size(); }

    double t_min() const { return edges.front().time; }
    double t_max() const { return edges.back().time; }
};

struct StaticProjection {
    bool directed = true;
    // Distinct collapsed pairs, sorted. Undirected mode stores each pair
    // with the smaller id first.
    std::vector<std::pair<VertexId, VertexId>> edges;
};

// Reads a whitespace- or comma-separated edge list: one "src dst time"
// per line, '#' starts a comment line. Labels are arbitrary tokens,
// remapped to 0..n-1 in first-appearance order. Edges are stably sorted
// by timestamp and tie indices assigned as the post-sort rank. Throws
// std::runtime_error naming the offending line on malformed input.
// sorted_hint skips the sort when the file is already time-ordered
// (verified; falls back to sorting when the hint is wrong).
TemporalNetwork load_edge_list(const std::string& path, bool sorted_hint = false);

// Same parser over an in-memory string; used by tests and generators.
TemporalNetwork parse_edge_list(const std::string& text, const std::string& origin = "<string>");

// Finalizes a network built programmatically from (src, dst, time)
// triples over ids 0..n-1: sorts, assigns ties, fills default labels.
TemporalNetwork make_network(std::size_t n, std::vector<TemporalEdge> edges);

// T[W]: keeps exactly the edges with both endpoints in W. Relative edge
// order, tie indices, ids, and labels are preserved. Throws
// std::domain_error when W contains a vertex outside T's active set.
TemporalNetwork induced_subnetwork(const TemporalNetwork& t, const std::vector<VertexId>& w);

// Collapses timestamps (and directions, in undirected mode) to one
// static edge per distinct pair. Self-loops are kept as pairs (v, v).
StaticProjection static_projection(const TemporalNetwork& t, bool directed);

// Maximum number of edges inside any length-delta time window, by a
// two-pointer sweep anchored at each edge.
std::size_t max_window_edges(const TemporalNetwork& t, double delta);

}  // namespace aldente
