#pragma once

// Shared fixtures and lookup helpers for the unit tests.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "aldente/match.hpp"
#include "aldente/motif.hpp"
#include "aldente/tgraph.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(ALDENTE_FIXTURE_DIR) + "/" + name;
}

inline aldente::TemporalNetwork load_fixture(const std::string& name) {
    return aldente::load_edge_list(fixture_path(name));
}

inline aldente::TemporalMotif load_motif(const std::string& name) {
    return aldente::parse_motif_file(fixture_path("motifs/" + name));
}

inline aldente::TemporalMotif two_path() { return aldente::parse_motif("a b\nb c\n"); }
inline aldente::TemporalMotif triangle() { return aldente::parse_motif("a b\nb c\nc a\n"); }
inline aldente::TemporalMotif back_forth() { return aldente::parse_motif("a b\nb a\n"); }

inline aldente::VertexId id_of(const aldente::TemporalNetwork& t, const std::string& label) {
    for (std::size_t v = 0; v < t.labels.size(); ++v) {
        if (t.labels[v] == label) return static_cast<aldente::VertexId>(v);
    }
    throw std::out_of_range("label not in network: " + label);
}

inline std::vector<aldente::VertexId> ids_of(const aldente::TemporalNetwork& t,
                                             const std::vector<std::string>& labels) {
    std::vector<aldente::VertexId> ids;
    ids.reserve(labels.size());
    for (const std::string& l : labels) ids.push_back(id_of(t, l));
    std::sort(ids.begin(), ids.end());
    return ids;
}

inline std::vector<std::string> labels_of(const aldente::TemporalNetwork& t,
                                          const std::vector<aldente::VertexId>& ids) {
    std::vector<std::string> labels;
    labels.reserve(ids.size());
    for (aldente::VertexId v : ids) labels.push_back(t.labels[v]);
    std::sort(labels.begin(), labels.end());
    return labels;
}

// Seeded random network for oracle comparisons: n vertices, m edges,
// integer-ish timestamps in [0, horizon) so span ties happen.
inline aldente::TemporalNetwork random_network(std::uint64_t seed, std::size_t n, std::size_t m,
                                               double horizon = 20.0) {
    std::mt19937_64 eng(seed);
    std::uniform_int_distribution<std::uint32_t> vertex(0, static_cast<std::uint32_t>(n - 1));
    std::uniform_int_distribution<int> tick(0, static_cast<int>(horizon) - 1);
    std::vector<aldente::TemporalEdge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        aldente::TemporalEdge e;
        e.src = vertex(eng);
        e.dst = vertex(eng);
        e.time = static_cast<double>(tick(eng));
        edges.push_back(e);
    }
    return aldente::make_network(n, std::move(edges));
}

inline std::vector<std::uint32_t> sorted_refs(const aldente::DeltaInstance& s) {
    return s.edge_refs;
}

inline bool same_instances(std::vector<aldente::DeltaInstance> a,
                           std::vector<aldente::DeltaInstance> b) {
    auto key = [](const aldente::DeltaInstance& s) { return s.edge_refs; };
    std::sort(a.begin(), a.end(),
              [&](const auto& x, const auto& y) { return key(x) < key(y); });
    std::sort(b.begin(), b.end(),
              [&](const auto& x, const auto& y) { return key(x) < key(y); });
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].edge_refs != b[i].edge_refs) return false;
    }
    return true;
}

}  // namespace testutil
