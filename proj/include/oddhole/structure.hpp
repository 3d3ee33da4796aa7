#pragma once

#include <array>

#include "oddhole/paths.hpp"

namespace oddhole {

/// Classification of a vertex v (off a hole C) by its neighbors on C.
/// v is C-major when no three cyclically consecutive hole vertices contain
/// all of N(v) ∩ V(C); big when it has at least four neighbors on C.
struct MajorClass {
    bool is_major = false;
    int hole_neighbors = 0;
    bool big = false;
};

inline MajorClass classify_major(const Graph& g, const Hole& c, int v) {
    g.check_vertex(v);
    if (c.contains(v)) throw std::invalid_argument("classify_major: vertex lies on the hole");
    const int m = c.length();
    std::vector<int> pos;  // hole positions adjacent to v, increasing
    for (int i = 0; i < m; ++i)
        if (g.adjacent(v, c.vertices[std::size_t(i)])) pos.push_back(i);
    const int k = int(pos.size());
    // The neighbors fit in a three-vertex subpath of C iff some circular gap
    // between consecutive ones spans all but at most two edges of the cycle.
    bool fits = true;
    if (k >= 2) {
        int max_gap = pos.front() + m - pos.back();
        for (int i = 1; i < k; ++i) max_gap = std::max(max_gap, pos[std::size_t(i)] - pos[std::size_t(i - 1)]);
        fits = max_gap >= m - 2;
    }
    MajorClass out;
    out.hole_neighbors = k;
    out.is_major = !fits;
    out.big = k >= 4;
    return out;
}

/// All big C-major vertices of g (necessarily off the hole).
inline VertexSet big_major_vertices(const Graph& g, const Hole& c) {
    VertexSet out(g.vertex_count());
    VertexSet on_hole(g.vertex_count());
    for (int v : c.vertices) on_hole.set(v);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (on_hole.test(v)) continue;
        MajorClass mc = classify_major(g, c, v);
        if (mc.is_major && mc.big) out.set(v);
    }
    return out;
}

/// A shortcut for C is a path between distinct nonadjacent hole vertices that
/// is strictly shorter than both arcs and carries no big C-major vertex.
inline bool is_shortcut(const Graph& g, const Hole& c, const Path& p) {
    if (!is_path_of(g, p.vertices)) throw std::invalid_argument("is_shortcut: not a path of the graph");
    int u = p.front(), v = p.back();
    if (u == v || c.index_of(u) < 0 || c.index_of(v) < 0)
        throw std::invalid_argument("is_shortcut: ends must be distinct vertices of the hole");
    if (g.adjacent(u, v)) throw std::invalid_argument("is_shortcut: ends must be nonadjacent");
    if (p.length() >= hole_distance(c, u, v)) return false;
    for (int w : p.vertices) {
        if (c.contains(w)) continue;
        MajorClass mc = classify_major(g, c, w);
        if (mc.is_major && mc.big) return false;
    }
    return true;
}

/// Verdict plus the first failed condition, for test triage and the
/// check-witness command.
struct CheckResult {
    bool ok = true;
    std::string reason;  // empty when ok

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

/// Pyramid: apex joined to a triangle base by three constituent induced
/// paths, disjoint except at the apex, at least two of length >= 2, with no
/// stray edges between the paths. paths[i] runs from apex to base[i].
struct PyramidWitness {
    int apex = -1;
    std::array<int, 3> base{-1, -1, -1};
    std::array<Path, 3> paths;
};

inline CheckResult check_pyramid(const Graph& g, const PyramidWitness& w) {
    const int n = g.vertex_count();
    std::array<int, 4> corners{w.apex, w.base[0], w.base[1], w.base[2]};
    for (int v : corners)
        if (v < 0 || v >= n) return CheckResult::fail("vertex id out of range");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (corners[std::size_t(i)] == corners[std::size_t(j)]) return CheckResult::fail("vertex distinctness");
    for (int i = 0; i < 3; ++i) {
        const Path& p = w.paths[std::size_t(i)];
        if (p.vertices.size() < 2 || p.front() != w.apex || p.back() != w.base[std::size_t(i)])
            return CheckResult::fail("path endpoints");
        if (!is_induced_path_of(g, p.vertices)) return CheckResult::fail("not an induced path");
    }
    // pairwise disjoint except the apex
    VertexSet seen(n);
    seen.set(w.apex);
    for (const Path& p : w.paths)
        for (int v : p.vertices) {
            if (v == w.apex) continue;
            if (seen.test(v)) return CheckResult::fail("paths share vertices");
            seen.set(v);
        }
    if (!g.adjacent(w.base[0], w.base[1]) || !g.adjacent(w.base[1], w.base[2]) ||
        !g.adjacent(w.base[0], w.base[2]))
        return CheckResult::fail("base triangle");
    int long_paths = 0;
    for (const Path& p : w.paths)
        if (p.length() >= 2) ++long_paths;
    if (long_paths < 2) return CheckResult::fail("length at least two");
    // Only edge between V(Pi)\{apex} and V(Pj)\{apex} is the base edge bibj.
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (int x : w.paths[std::size_t(i)].vertices) {
                if (x == w.apex) continue;
                for (int y : w.paths[std::size_t(j)].vertices) {
                    if (y == w.apex) continue;
                    bool is_base_edge = x == w.base[std::size_t(i)] && y == w.base[std::size_t(j)];
                    if (!is_base_edge && g.adjacent(x, y)) return CheckResult::fail("cross edges");
                }
            }
        }
    }
    return CheckResult::pass();
}

inline bool verify_pyramid(const Graph& g, const PyramidWitness& w) { return check_pyramid(g, w).ok; }

/// Jewel: ring v1..v5 with edges v1v2,v2v3,v3v4,v4v5,v5v1 and nonedges
/// v1v3,v2v4,v1v4, plus a path from v1 to v4 whose interior is untouched by
/// v2,v3,v5. ring[i] is v(i+1); path runs from v1 to v4.
struct JewelWitness {
    std::array<int, 5> ring{-1, -1, -1, -1, -1};
    Path path;
};

inline CheckResult check_jewel(const Graph& g, const JewelWitness& w) {
    const int n = g.vertex_count();
    for (int v : w.ring)
        if (v < 0 || v >= n) return CheckResult::fail("vertex id out of range");
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (w.ring[std::size_t(i)] == w.ring[std::size_t(j)]) return CheckResult::fail("vertex distinctness");
    const int v1 = w.ring[0], v2 = w.ring[1], v3 = w.ring[2], v4 = w.ring[3], v5 = w.ring[4];
    if (!(g.adjacent(v1, v2) && g.adjacent(v2, v3) && g.adjacent(v3, v4) && g.adjacent(v4, v5) &&
          g.adjacent(v5, v1)))
        return CheckResult::fail("ring edges");
    if (g.adjacent(v1, v3) || g.adjacent(v2, v4) || g.adjacent(v1, v4))
        return CheckResult::fail("required nonedge");
    if (!is_path_of(g, w.path.vertices)) return CheckResult::fail("not a path");
    if (w.path.front() != v1 || w.path.back() != v4) return CheckResult::fail("path endpoints");
    for (std::size_t i = 1; i + 1 < w.path.vertices.size(); ++i) {
        int x = w.path.vertices[i];
        if (x == v2 || x == v3 || x == v5) return CheckResult::fail("interior contains ring vertex");
        if (g.adjacent(x, v2) || g.adjacent(x, v3) || g.adjacent(x, v5))
            return CheckResult::fail("ring neighbor in path interior");
    }
    return CheckResult::pass();
}

inline bool verify_jewel(const Graph& g, const JewelWitness& w) { return check_jewel(g, w).ok; }

/// An odd hole C is jewelled if either
///  - four consecutive hole vertices c1-c2-c4-c5 have a common neighbor c3 of
///    c1 and c5 somewhere in the graph, or
///  - three consecutive hole vertices c1-c3-c5 extend by two off-hole
///    vertices c2,c4 with c1-c2-c4-c5 an induced path.
inline bool is_jewelled(const Graph& g, const Hole& c) {
    const int n = g.vertex_count();
    const int m = c.length();
    if (m < 5) return false;
    VertexSet on_hole(n);
    for (int v : c.vertices) on_hole.set(v);
    VertexSet off_hole(n);
    for (int v = 0; v < n; ++v)
        if (!on_hole.test(v)) off_hole.set(v);

    auto at = [&](int i) { return c.vertices[std::size_t(((i % m) + m) % m)]; };

    for (int i = 0; i < m; ++i) {
        // first bullet: c1,c2,c4,c5 = consecutive hole vertices starting at i
        int c1 = at(i), c5 = at(i + 3);
        if ((g.adjacency(c1) & g.adjacency(c5)).any()) return true;
    }
    for (int i = 0; i < m; ++i) {
        // second bullet: c1,c3,c5 consecutive; c2,c4 off the hole
        int c1 = at(i), c5 = at(i + 2);
        VertexSet c2s = g.adjacency(c1) & off_hole;
        bool hit = false;
        c2s.for_each([&](int c2) {
            if (hit) return;
            if (g.adjacent(c2, c5)) return;  // c2c5 must be a nonedge
            VertexSet c4s = g.adjacency(c2) & g.adjacency(c5);
            c4s &= off_hole;
            c4s.subtract(g.adjacency(c1));  // c1c4 must be a nonedge
            c4s.reset(c2);
            if (c4s.any()) hit = true;
        });
        if (hit) return true;
    }
    return false;
}

/// Great pyramid: the two long constituent paths close into a shortest odd
/// hole and the third path is strictly shorter than both. By convention
/// paths[0], paths[1] are the hole pair (P1, P2) and paths[2] is P3.
struct GreatPyramidWitness {
    PyramidWitness pyramid;

    /// Hole a-P1-b1-b2-P2-a.
    Hole hole() const {
        std::vector<int> seq = pyramid.paths[0].vertices;  // a..b1
        const auto& p2 = pyramid.paths[1].vertices;        // a..b2
        for (std::size_t i = p2.size(); i-- > 1;) seq.push_back(p2[i]);
        return Hole{std::move(seq)};
    }
    /// V(P3) minus the apex.
    std::vector<int> heart() const {
        return std::vector<int>(pyramid.paths[2].vertices.begin() + 1, pyramid.paths[2].vertices.end());
    }
    int height() const { return pyramid.paths[2].length(); }
};

/// Checks the pyramid conditions, that P3 is strictly shorter than P1 and P2
/// (with the parity this forces), and that the P1/P2 hole has the externally
/// supplied minimum odd-hole length.
inline bool verify_great_pyramid(const Graph& g, const GreatPyramidWitness& w, int shortest_odd_hole_length) {
    if (!check_pyramid(g, w.pyramid).ok) return false;
    int l1 = w.pyramid.paths[0].length();
    int l2 = w.pyramid.paths[1].length();
    int l3 = w.pyramid.paths[2].length();
    if (l3 >= l1 || l3 >= l2) return false;
    int hole_len = l1 + l2 + 1;
    if (hole_len % 2 == 0 || hole_len != shortest_odd_hole_length) return false;
    if ((l1 % 2) == (l3 % 2)) return false;  // else P1 and P3 close into a shorter odd hole
    return true;
}

}  // namespace oddhole
