#include "aldente/tgraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aldente {

namespace {

bool time_less(const TemporalEdge& a, const TemporalEdge& b) { return a.time < b.time; }

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line_no, const std::string& what) {
    throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": " + what);
}

// Splits on spaces, tabs and commas; empty fields collapse.
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

void finalize(TemporalNetwork& t, bool sorted_hint) {
    if (!sorted_hint || !std::is_sorted(t.edges.begin(), t.edges.end(), time_less)) {
        std::stable_sort(t.edges.begin(), t.edges.end(), time_less);
    }
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        t.edges[i].tie = static_cast<std::uint32_t>(i);
    }
    t.vertices.resize(t.labels.size());
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
        t.vertices[v] = static_cast<VertexId>(v);
    }
}

TemporalNetwork parse_lines(std::istream& in, const std::string& origin, bool sorted_hint) {
    TemporalNetwork t;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::string> tok;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        tokenize(line, tok);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok.size() != 3) {
            parse_fail(origin, line_no, "expected 'src dst time', got " + std::to_string(tok.size()) + " fields");
        }
        TemporalEdge e;
        for (int side = 0; side < 2; ++side) {
            const std::string& label = tok[side];
            auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(t.labels.size()));
            if (inserted) t.labels.push_back(label);
            (side == 0 ? e.src : e.dst) = it->second;
        }
        const std::string& ts = tok[2];
        auto res = std::from_chars(ts.data(), ts.data() + ts.size(), e.time);
        if (res.ec != std::errc() || res.ptr != ts.data() + ts.size()) {
            parse_fail(origin, line_no, "bad timestamp '" + ts + "'");
        }
        t.edges.push_back(e);
    }
    finalize(t, sorted_hint);
    return t;
}

}  // namespace

TemporalNetwork load_edge_list(const std::string& path, bool sorted_hint) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return parse_lines(in, path, sorted_hint);
}

TemporalNetwork parse_edge_list(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    return parse_lines(in, origin, false);
}

TemporalNetwork make_network(std::size_t n, std::vector<TemporalEdge> edges) {
    for (const TemporalEdge& e : edges) {
        if (e.src >= n || e.dst >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
    }
    TemporalNetwork t;
    t.edges = std::move(edges);
    t.labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) t.labels.push_back(std::to_string(v));
    finalize(t, false);
    return t;
}

TemporalNetwork induced_subnetwork(const TemporalNetwork& t, const std::vector<VertexId>& w) {
    std::vector<VertexId> keep(w);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<char> member(t.universe(), 0);
    for (VertexId v : keep) {
        if (!std::binary_search(t.vertices.begin(), t.vertices.end(), v)) {
            throw std::domain_error("vertex " + std::to_string(v) + " not in the network");
        }
        member[v] = 1;
    }

    TemporalNetwork sub;
    sub.labels = t.labels;
    sub.vertices = std::move(keep);
    for (const TemporalEdge& e : t.edges) {
        if (member[e.src] && member[e.dst]) sub.edges.push_back(e);
    }
    return sub;
}

StaticProjection static_projection(const TemporalNetwork& t, bool directed) {
    StaticProjection p;
    p.directed = directed;
    p.edges.reserve(t.edges.size());
    for (const TemporalEdge& e : t.edges) {
        VertexId a = e.src;
        VertexId b = e.dst;
        if (!directed && a > b) std::swap(a, b);
        p.edges.emplace_back(a, b);
    }
    std::sort(p.edges.begin(), p.edges.end());
    p.edges.erase(std::unique(p.edges.begin(), p.edges.end()), p.edges.end());
    return p;
}

std::size_t max_window_edges(const TemporalNetwork& t, double delta) {
    std::size_t best = 0;
    std::size_t lo = 0;
    for (std::size_t hi = 0; hi < t.edges.size(); ++hi) {
        while (t.edges[hi].time - t.edges[lo].time > delta) ++lo;
        best = std::max(best, hi - lo + 1);
    }
    return best;
}

}  // namespace aldente
