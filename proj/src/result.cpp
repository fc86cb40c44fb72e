#include "aldente/result.hpp"

#include <algorithm>
#include <stdexcept>

namespace aldente {

std::vector<VertexId> trace_set_at(const std::vector<VertexId>& start, const PeelTrace& trace,
                                   std::size_t snapshot_index) {
    if (snapshot_index >= trace.snapshots.size()) {
        throw std::out_of_range("snapshot index past end of trace");
    }
    std::vector<VertexId> removed;
    for (std::size_t b = 0; b < snapshot_index; ++b) {
        removed.insert(removed.end(), trace.batches[b].begin(), trace.batches[b].end());
    }
    std::sort(removed.begin(), removed.end());
    std::vector<VertexId> result;
    result.reserve(start.size() - removed.size());
    for (VertexId v : start) {
        if (!std::binary_search(removed.begin(), removed.end(), v)) result.push_back(v);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace aldente
