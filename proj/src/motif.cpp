#include "aldente/motif.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace aldente {

namespace {

void tokenize(const std::string& line, std::vector<std::string>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

TemporalMotif parse_motif(const std::string& text, const std::string& origin) {
    TemporalMotif m;
    std::unordered_map<std::string, std::uint32_t> ids;
    std::istringstream in(text);
    std::vector<std::string> tok;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        tokenize(line, tok);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok.size() != 2) {
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) +
                                        ": expected 'src dst', got " + std::to_string(tok.size()) + " fields");
        }
        std::uint32_t ep[2];
        for (int side = 0; side < 2; ++side) {
            auto [it, inserted] = ids.try_emplace(tok[side], static_cast<std::uint32_t>(ids.size()));
            ep[side] = it->second;
        }
        m.edges.emplace_back(ep[0], ep[1]);
    }
    m.k = static_cast<std::uint32_t>(ids.size());
    m.ell = static_cast<std::uint32_t>(m.edges.size());
    if (m.k < 2) throw std::invalid_argument(origin + ": motif needs at least 2 vertices");
    if (m.ell < 2) throw std::invalid_argument(origin + ": motif needs at least 2 edges");

    std::vector<std::uint32_t> parent(m.k);
    std::iota(parent.begin(), parent.end(), 0u);
    for (auto [a, b] : m.edges) {
        parent[find_root(parent, a)] = find_root(parent, b);
    }
    const std::uint32_t root = find_root(parent, 0);
    for (std::uint32_t v = 1; v < m.k; ++v) {
        if (find_root(parent, v) != root) {
            throw std::invalid_argument(origin + ": motif is not weakly connected");
        }
    }
    return m;
}

TemporalMotif parse_motif_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open motif file: " + path);
    std::ostringstream all;
    all << in.rdbuf();
    return parse_motif(all.str(), path);
}

std::string serialize_motif(const TemporalMotif& m) {
    // Relabels by first appearance so parse_motif reproduces the ids.
    std::vector<std::uint32_t> remap(m.k, m.k);
    std::uint32_t next = 0;
    std::ostringstream out;
    for (auto [a, b] : m.edges) {
        if (remap[a] == m.k) remap[a] = next++;
        if (remap[b] == m.k) remap[b] = next++;
        out << remap[a] << ' ' << remap[b] << '\n';
    }
    return out.str();
}

MotifSkeleton skeleton(const TemporalMotif& m) {
    MotifSkeleton s;
    s.k = m.k;
    for (auto [a, b] : m.edges) {
        if (a == b) continue;
        s.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(s.edges.begin(), s.edges.end());
    s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
    return s;
}

}  // namespace aldente
