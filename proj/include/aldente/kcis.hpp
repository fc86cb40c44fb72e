#pragma once

// Weighted catalog of the k-vertex sets hosting at least one motif
// instance, with incremental vertex removal. One full enumeration pass
// builds it; the peelers then maintain exact degrees by subtracting
// entry weights as vertices disappear, never re-enumerating.

#include <cstdint>
#include <vector>

#include "aldente/match.hpp"
#include "aldente/tgraph.hpp"

namespace aldente {

struct KcisEntry {
    std::vector<VertexId> verts;  // size k, sorted ascending
    double weight = 0.0;          // total weight of instances on exactly this vertex set
    bool live = true;
};

class KcisCatalog {
public:
    // Enumerates instances of the motif in t and groups their weights by
    // canonical k-vertex set. Empty catalog when there are no instances.
    static KcisCatalog build(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                             const WeightFunction& tau);

    // Marks every live entry containing v dead and subtracts each dead
    // entry's weight from the degree accumulator of its members. When
    // touched is given, it receives the surviving vertices whose degree
    // changed. Throws std::domain_error when v was already removed.
    void remove_vertex(VertexId v, std::vector<VertexId>* touched = nullptr);

    const std::vector<KcisEntry>& entries() const { return entries_; }
    const std::vector<std::uint32_t>& entries_of(VertexId v) const { return by_vertex_[v]; }
    double degree(VertexId v) const { return degree_[v]; }
    const std::vector<double>& degrees() const { return degree_; }
    bool removed(VertexId v) const { return removed_[v] != 0; }

    std::size_t live_entries() const { return live_entries_; }
    double live_weight() const { return live_weight_; }          // current total entry weight
    double total_weight() const { return total_weight_; }        // at build time
    double min_instance_weight() const { return min_instance_weight_; }
    std::uint32_t k() const { return k_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<KcisEntry> entries_;
    std::vector<std::vector<std::uint32_t>> by_vertex_;  // vertex id -> entry indices
    std::vector<double> degree_;                         // vertex id -> live weighted degree
    std::vector<char> removed_;
    std::size_t live_entries_ = 0;
    double live_weight_ = 0.0;
    double total_weight_ = 0.0;
    double min_instance_weight_ = 0.0;
    std::uint32_t k_ = 0;
};

}  // namespace aldente
