#pragma once

// Temporal motif representation: a small directed multigraph whose edge
// list order is the required arrival order of matched network edges.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace aldente {

struct TemporalMotif {
    std::uint32_t k = 0;    // vertex count, ids 0..k-1
    std::uint32_t ell = 0;  // edge count
    // Listed in arrival order; this order is part of the motif identity.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct MotifSkeleton {
    std::uint32_t k = 0;
    // Undirected simple graph: directions and multiplicities collapsed,
    // self-loops dropped. Pairs stored with the smaller id first, sorted.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

// Parses one "x y" edge per line, lines in arrival order, '#' comments
// and blank lines skipped. Vertex labels are arbitrary tokens remapped
// to 0..k-1 by first appearance. Throws std::invalid_argument when the
// motif has fewer than 2 vertices or 2 edges, or is weakly disconnected.
TemporalMotif parse_motif(const std::string& text, const std::string& origin = "<string>");
TemporalMotif parse_motif_file(const std::string& path);

// Round-trips through parse_motif to an identical motif.
std::string serialize_motif(const TemporalMotif& m);

MotifSkeleton skeleton(const TemporalMotif& m);

}  // namespace aldente
