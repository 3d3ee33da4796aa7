#pragma once

#include <optional>

#include "oddhole/graph.hpp"

namespace oddhole {

/// Open path stored as its vertex sequence v0..vk; length is the edge count k.
struct Path {
    std::vector<int> vertices;

    int length() const { return int(vertices.size()) - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
    /// Vertices that are not ends.
    std::vector<int> interior() const {
        if (vertices.size() <= 2) return {};
        return std::vector<int>(vertices.begin() + 1, vertices.end() - 1);
    }
};

/// Hole: induced cycle of length >= 4, stored as a cyclic vertex sequence
/// c1..cm (the closing edge cm-c1 is implicit); length is m.
struct Hole {
    std::vector<int> vertices;

    int length() const { return int(vertices.size()); }
    bool odd() const { return length() % 2 == 1; }
    bool contains(int v) const {
        for (int u : vertices)
            if (u == v) return true;
        return false;
    }
    int index_of(int v) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return int(i);
        return -1;
    }
};

/// True when seq is a walk along existing edges with pairwise distinct vertices.
inline bool is_path_of(const Graph& g, const std::vector<int>& seq) {
    const int n = g.vertex_count();
    if (seq.empty()) return false;
    VertexSet seen(n);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int v = seq[i];
        if (v < 0 || v >= n) return false;
        if (seen.test(v)) return false;
        seen.set(v);
        if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
    }
    return true;
}

/// A path with no edges between non-consecutive vertices.
inline bool is_induced_path_of(const Graph& g, const std::vector<int>& seq) {
    if (!is_path_of(g, seq)) return false;
    for (std::size_t i = 0; i + 2 < seq.size(); ++i)
        for (std::size_t j = i + 2; j < seq.size(); ++j)
            if (g.adjacent(seq[i], seq[j])) return false;
    return true;
}

/// True iff seq is a cyclic sequence of >= 4 distinct vertices forming an
/// induced cycle of g. Malformed input yields false, never an error.
inline bool is_hole(const Graph& g, const std::vector<int>& seq) {
    const int n = g.vertex_count();
    const int m = int(seq.size());
    if (m < 4) return false;
    VertexSet members(n);
    for (int v : seq) {
        if (v < 0 || v >= n) return false;
        if (members.test(v)) return false;
        members.set(v);
    }
    // Each vertex must see exactly its two cyclic neighbors inside the cycle.
    VertexSet expected(n);
    for (int i = 0; i < m; ++i) {
        int prev = seq[std::size_t((i + m - 1) % m)];
        int next = seq[std::size_t((i + 1) % m)];
        expected.clear();
        expected.set(prev);
        expected.set(next);
        if ((g.adjacency(seq[std::size_t(i)]) & members) != expected) return false;
    }
    return true;
}

inline bool is_hole(const Graph& g, const Hole& h) { return is_hole(g, h.vertices); }

/// d_C(u,v): length of the shorter of the two arcs of C between u and v.
inline int hole_distance(const Hole& c, int u, int v) {
    int iu = c.index_of(u);
    int iv = c.index_of(v);
    if (iu < 0 || iv < 0) throw std::invalid_argument("hole_distance: vertex not on the hole");
    int m = c.length();
    int d = iu <= iv ? iv - iu : iu - iv;
    return std::min(d, m - d);
}

/// Canonical representative of a cyclic sequence under rotation and
/// reflection: smallest vertex first, followed by the smaller of its two
/// cyclic neighbors. Gives stable output and golden files.
inline std::vector<int> canonical_cycle(const std::vector<int>& seq) {
    const int m = int(seq.size());
    if (m == 0) return {};
    int pos = 0;
    for (int i = 1; i < m; ++i)
        if (seq[std::size_t(i)] < seq[std::size_t(pos)]) pos = i;
    int left = seq[std::size_t((pos + m - 1) % m)];
    int right = seq[std::size_t((pos + 1) % m)];
    std::vector<int> out;
    out.reserve(std::size_t(m));
    if (right <= left) {
        for (int i = 0; i < m; ++i) out.push_back(seq[std::size_t((pos + i) % m)]);
    } else {
        for (int i = 0; i < m; ++i) out.push_back(seq[std::size_t((pos + m - i) % m)]);
    }
    return out;
}

inline Hole canonical_hole(const Hole& h) { return Hole{canonical_cycle(h.vertices)}; }

/// Orders holes by (length, canonical vertex sequence); the tie-break that
/// every "output the shortest recorded hole" step uses.
inline bool hole_less(const Hole& a, const Hole& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return canonical_cycle(a.vertices) < canonical_cycle(b.vertices);
}

/// Shortest s-t path whose interior avoids `forbidden_interior`. The ends may
/// themselves belong to the forbidden set; only interior vertices are
/// constrained. Deterministic: breadth-first levels are scanned in increasing
/// id order and the walk back from t always takes the smallest-id predecessor,
/// so the result is a canonical representative among all shortest paths.
inline std::optional<Path> shortest_path_avoiding(const Graph& g, int s, int t,
                                                  const VertexSet& forbidden_interior) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw std::invalid_argument("shortest_path_avoiding: equal endpoints");
    const int n = g.vertex_count();
    std::vector<int> dist(std::size_t(n), -1);
    std::vector<int> queue;
    queue.reserve(std::size_t(n));
    dist[std::size_t(s)] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        if (u == t) break;  // t is never expanded; it may be forbidden as interior
        for (int w : g.neighbors(u)) {
            if (dist[std::size_t(w)] >= 0) continue;
            if (w != t && forbidden_interior.test(w)) continue;
            dist[std::size_t(w)] = dist[std::size_t(u)] + 1;
            queue.push_back(w);
        }
    }
    if (dist[std::size_t(t)] < 0) return std::nullopt;
    std::vector<int> rev{t};
    int cur = t;
    while (cur != s) {
        int d = dist[std::size_t(cur)];
        int pick = -1;
        for (int w : g.neighbors(cur)) {
            if (dist[std::size_t(w)] == d - 1) {
                pick = w;
                break;  // neighbors are sorted: first hit is the smallest id
            }
        }
        rev.push_back(pick);
        cur = pick;
    }
    std::reverse(rev.begin(), rev.end());
    return Path{std::move(rev)};
}

}  // namespace oddhole
