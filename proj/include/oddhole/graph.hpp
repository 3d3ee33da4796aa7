#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddhole {

// Thrown when input data (edge lists, witness files, ...) is malformed.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an operation refuses to run because a size guard would be
// exceeded (brute-force oracle, full locator enumeration).
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Subset of a fixed vertex universe {0,...,n-1}, packed into 64-bit words.
/// Membership tests, unions and intersections are word-parallel.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int v) const { return (w_[std::size_t(v) >> 6] >> (v & 63)) & 1; }
    void set(int v) { w_[std::size_t(v) >> 6] |= std::uint64_t(1) << (v & 63); }
    void reset(int v) { w_[std::size_t(v) >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    /// this \ o
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    /// Smallest member, or -1 when empty.
    int lowest() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(int(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(std::size_t(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return std::size_t(h ^ std::uint64_t(n_));
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Simple undirected graph with 0-based vertex ids. Adjacency is kept both as
/// per-vertex bitsets (constant-time membership) and as sorted neighbor lists
/// (deterministic iteration order). Loops and parallel edges are rejected.
/// Instances are treated as immutable once populated; all algorithms take
/// const references and are pure functions of their inputs.
class Graph {
public:
    explicit Graph(int n = 0) : n_(n), adj_(std::size_t(n), VertexSet(n)), nbr_(std::size_t(n)) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (adjacent(u, v))
            throw std::invalid_argument("graph: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        adj_[std::size_t(u)].set(v);
        adj_[std::size_t(v)].set(u);
        insert_sorted(nbr_[std::size_t(u)], v);
        insert_sorted(nbr_[std::size_t(v)], u);
        ++m_;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[std::size_t(u)].test(v);
    }

    int degree(int v) const {
        check_vertex(v);
        return int(nbr_[std::size_t(v)].size());
    }

    /// Neighbors in increasing id order.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return nbr_[std::size_t(v)];
    }

    const VertexSet& adjacency(int v) const {
        check_vertex(v);
        return adj_[std::size_t(v)];
    }

    /// Edges as (u,v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(std::size_t(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : nbr_[std::size_t(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && m_ == o.m_ && nbr_ == o.nbr_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("graph: vertex id " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n_) + ")");
    }

private:
    static void insert_sorted(std::vector<int>& xs, int v) {
        xs.insert(std::upper_bound(xs.begin(), xs.end(), v), v);
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::vector<int>> nbr_;
};

/// N[v]: v together with its neighbors.
inline VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet s = g.adjacency(v);
    s.set(v);
    return s;
}

/// N[X]: every vertex in X or with a neighbor in X.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& xs) {
    VertexSet s = xs;
    xs.for_each([&](int v) { s |= g.adjacency(v); });
    return s;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // subgraph id -> original id
};

/// Subgraph induced on the vertices NOT in `deleted`, with ids compacted.
inline InducedSubgraph induced_subgraph_without(const Graph& g, const VertexSet& deleted) {
    const int n = g.vertex_count();
    std::vector<int> to_parent;
    std::vector<int> to_sub(std::size_t(n), -1);
    for (int v = 0; v < n; ++v) {
        if (!deleted.test(v)) {
            to_sub[std::size_t(v)] = int(to_parent.size());
            to_parent.push_back(v);
        }
    }
    Graph sub(int(to_parent.size()));
    for (int u = 0; u < n; ++u) {
        if (deleted.test(u)) continue;
        for (int v : g.neighbors(u)) {
            if (u < v && !deleted.test(v)) sub.add_edge(to_sub[std::size_t(u)], to_sub[std::size_t(v)]);
        }
    }
    return {std::move(sub), std::move(to_parent)};
}

}  // namespace oddhole
