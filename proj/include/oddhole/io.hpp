#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "oddhole/graph.hpp"

namespace oddhole {

enum class GraphFormat { edgelist, dimacs, graph6 };

inline std::optional<GraphFormat> graph_format_from_name(const std::string& name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "graph6") return GraphFormat::graph6;
    return std::nullopt;
}

namespace detail {

inline void add_edge_checked(Graph& g, int u, int v, int lineno) {
    try {
        g.add_edge(u, v);
    } catch (const std::invalid_argument& e) {
        throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
    }
}

}  // namespace detail

/// Edge list: one "u v" pair per line, whitespace separated, 0-based ids,
/// '#' starts a comment. A leading "# n = K" comment pins the vertex count
/// (needed to round-trip isolated vertices); otherwise the count is the
/// largest id plus one. Self-loops and duplicate edges are parse errors.
inline Graph read_edgelist(std::istream& in) {
    std::string line;
    struct Entry {
        int u, v, lineno;
    };
    std::vector<Entry> edges;
    int declared_n = -1;
    int max_id = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string content = line.substr(0, line.find('#'));
        if (auto hash = line.find('#'); hash != std::string::npos) {
            std::istringstream directive(line.substr(hash + 1));
            std::string word, eq;
            long long val = 0;
            if (directive >> word >> eq >> val && word == "n" && eq == "=" && declared_n < 0) {
                if (val < 0) throw parse_error("line " + std::to_string(lineno) + ": negative vertex count");
                declared_n = int(val);
            }
        }
        std::istringstream ss(content);
        long long u, v;
        if (!(ss >> u)) continue;  // blank or comment-only line
        if (!(ss >> v)) throw parse_error("line " + std::to_string(lineno) + ": expected two vertex ids");
        std::string trailing;
        if (ss >> trailing) throw parse_error("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || v < 0) throw parse_error("line " + std::to_string(lineno) + ": negative vertex id");
        edges.push_back({int(u), int(v), lineno});
        max_id = std::max(max_id, int(std::max(u, v)));
    }
    int n = std::max(declared_n, max_id + 1);
    Graph g(n);
    for (const Entry& e : edges) detail::add_edge_checked(g, e.u, e.v, e.lineno);
    return g;
}

/// DIMACS: "p edge n m" then "e u v" lines with 1-based ids.
inline Graph read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string kind;
        ss >> kind;
        if (kind == "p") {
            std::string fmt;
            long long n = -1, m = -1;
            if (!(ss >> fmt >> n >> m) || n < 0)
                throw parse_error("line " + std::to_string(lineno) + ": bad problem line");
            g.emplace(int(n));
        } else if (kind == "e") {
            if (!g) throw parse_error("line " + std::to_string(lineno) + ": edge before problem line");
            long long u, v;
            if (!(ss >> u >> v)) throw parse_error("line " + std::to_string(lineno) + ": bad edge line");
            if (u < 1 || v < 1 || u > g->vertex_count() || v > g->vertex_count())
                throw parse_error("line " + std::to_string(lineno) + ": vertex id out of range");
            detail::add_edge_checked(*g, int(u - 1), int(v - 1), lineno);
        } else {
            throw parse_error("line " + std::to_string(lineno) + ": unknown record '" + kind + "'");
        }
    }
    if (!g) throw parse_error("dimacs: missing problem line");
    return std::move(*g);
}

/// graph6 (first non-empty line; ">>graph6<<" header tolerated).
inline Graph read_graph6(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) break;
    }
    if (line.empty()) throw parse_error("graph6: empty input");
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= line.size()) throw parse_error("graph6: truncated input");
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range");
        return c - 63;
    };
    long long n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else if (byte(1) < 63) {
        n = (static_cast<long long>(byte(1)) << 12) | (static_cast<long long>(byte(2)) << 6) | byte(3);
        pos = 4;
    } else {
        n = 0;
        for (int i = 2; i < 8; ++i) n = (n << 6) | byte(std::size_t(i));
        pos = 8;
    }
    if (n > 100000) throw parse_error("graph6: vertex count too large");
    Graph g(static_cast<int>(n));
    const long long bits = n * (n - 1) / 2;
    const long long need = (bits + 5) / 6;
    if (static_cast<long long>(line.size()) - static_cast<long long>(pos) != need) throw parse_error("graph6: wrong encoding length");
    long long bi = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bi) {
            int b = byte(pos + std::size_t(bi / 6));
            if ((b >> (5 - bi % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

inline Graph read_graph(std::istream& in, GraphFormat f) {
    switch (f) {
        case GraphFormat::edgelist: return read_edgelist(in);
        case GraphFormat::dimacs: return read_dimacs(in);
        case GraphFormat::graph6: return read_graph6(in);
    }
    throw parse_error("unknown graph format");
}

/// Canonical edge-list writer: vertex-count directive, then edges sorted
/// with u < v. Output re-parses to an identical graph.
inline void write_edgelist(std::ostream& out, const Graph& g) {
    out << "# n = " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace oddhole
