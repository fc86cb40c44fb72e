#include "aldente/kcis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "aldente/common.hpp"

namespace aldente {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<VertexId>& v) const {
        std::size_t h = 0x12f391ULL;
        for (VertexId x : v) hash_combine(h, splitmix64(x));
        return h;
    }
};

}  // namespace

KcisCatalog KcisCatalog::build(const TemporalNetwork& t, const TemporalMotif& motif, double delta,
                               const WeightFunction& tau) {
    KcisCatalog cat;
    cat.k_ = motif.k;
    cat.by_vertex_.resize(t.universe());
    cat.degree_.assign(t.universe(), 0.0);
    cat.removed_.assign(t.universe(), 0);

    std::unordered_map<std::vector<VertexId>, std::uint32_t, VecHash> index;
    std::vector<VertexId> key;
    double min_weight = std::numeric_limits<double>::infinity();
    std::size_t since_poll = 0;

    enumerate_instances(t, motif, delta, [&](const DeltaInstance& s) {
        key.clear();
        for (std::uint32_t ref : s.edge_refs) {
            key.push_back(t.edges[ref].src);
            key.push_back(t.edges[ref].dst);
        }
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        const double w = weigh(t, s, tau);
        min_weight = std::min(min_weight, w);
        auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(cat.entries_.size()));
        if (inserted) {
            cat.entries_.push_back(KcisEntry{key, 0.0, true});
        }
        cat.entries_[it->second].weight += w;
        if (++since_poll >= 65536) {
            since_poll = 0;
            check_deadline();
        }
    });

    for (std::uint32_t e = 0; e < cat.entries_.size(); ++e) {
        const KcisEntry& entry = cat.entries_[e];
        cat.total_weight_ += entry.weight;
        for (VertexId v : entry.verts) {
            cat.by_vertex_[v].push_back(e);
            cat.degree_[v] += entry.weight;
        }
    }
    cat.live_entries_ = cat.entries_.size();
    cat.live_weight_ = cat.total_weight_;
    cat.min_instance_weight_ = cat.entries_.empty() ? 0.0 : min_weight;
    return cat;
}

void KcisCatalog::remove_vertex(VertexId v, std::vector<VertexId>* touched) {
    if (removed_[v]) throw std::domain_error("vertex " + std::to_string(v) + " already removed");
    removed_[v] = 1;
    for (std::uint32_t e : by_vertex_[v]) {
        KcisEntry& entry = entries_[e];
        if (!entry.live) continue;
        entry.live = false;
        --live_entries_;
        live_weight_ -= entry.weight;
        for (VertexId u : entry.verts) {
            degree_[u] -= entry.weight;
            if (touched && u != v && !removed_[u]) touched->push_back(u);
        }
    }
    degree_[v] = 0.0;
    if (touched) {
        std::sort(touched->begin(), touched->end());
        touched->erase(std::unique(touched->begin(), touched->end()), touched->end());
    }
}

}  // namespace aldente
