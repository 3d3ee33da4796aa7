#pragma once

#include <variant>

#include "oddhole/locator.hpp"

namespace oddhole {

struct OracleOptions {
    int max_n = 16;      // refuse larger inputs unless forced
    bool force = false;
};

namespace detail {

// Depth-first enumeration of induced cycles: grow induced paths from their
// smallest vertex, close when both ends of the path see the new vertex and
// nothing else on it does. A path of k edges can only close into a cycle of
// length >= k+1, which drives the pruning.
class InducedCycleSearch {
public:
    explicit InducedCycleSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    // Minimum-length odd induced cycle of length >= 5; collect_all keeps
    // every minimum one (canonicalized, deduplicated).
    void run(bool collect_all) {
        best_len_ = n_ + 1;
        found_.clear();
        collect_all_ = collect_all;
        path_.clear();
        for (int s = 0; s < n_; ++s) {
            path_.push_back(s);
            for (int v1 : g_.neighbors(s)) {
                if (v1 <= s) continue;
                path_.push_back(v1);
                VertexSet used(n_);
                used.set(s);
                used.set(v1);
                extend(used, VertexSet(n_));
                path_.pop_back();
            }
            path_.pop_back();
        }
    }

    std::optional<int> best_length() const {
        if (found_.empty()) return std::nullopt;
        return best_len_;
    }
    const std::vector<std::vector<int>>& holes() const { return found_; }

private:
    void extend(const VertexSet& used, const VertexSet& blocked) {
        const int k = int(path_.size()) - 1;  // edges so far; closing now costs k+1
        if (collect_all_ ? (k + 1 > best_len_) : (k + 1 >= best_len_)) return;
        const int s = path_.front();
        const int last = path_.back();
        for (int w : g_.neighbors(last)) {
            if (w <= s || used.test(w) || blocked.test(w)) continue;
            if (g_.adjacent(w, s)) {
                // closes a cycle s-..-last-w of length k+2
                int len = k + 2;
                if (len >= 5 && len % 2 == 1 && len <= best_len_) {
                    if (path_[1] < w) {  // each cycle shows up once per direction
                        path_.push_back(w);
                        record(len);
                        path_.pop_back();
                    }
                }
                continue;  // a chord to s would survive any extension
            }
            path_.push_back(w);
            VertexSet used2 = used;
            used2.set(w);
            VertexSet blocked2 = blocked;
            blocked2 |= g_.adjacency(last);
            extend(used2, blocked2);
            path_.pop_back();
        }
    }

    void record(int len) {
        if (len < best_len_) {
            best_len_ = len;
            found_.clear();
        }
        std::vector<int> canon = canonical_cycle(path_);
        for (const auto& h : found_)
            if (h == canon) return;
        found_.push_back(std::move(canon));
    }

    const Graph& g_;
    int n_;
    bool collect_all_ = false;
    int best_len_ = 0;
    std::vector<int> path_;
    std::vector<std::vector<int>> found_;
};

}  // namespace detail

/// Ground-truth shortest odd hole by exhaustive induced-cycle search.
/// Exponential in the worst case; guarded by size.
inline Detection brute_shortest_odd_hole(const Graph& g, const OracleOptions& opt = {}) {
    if (g.vertex_count() > opt.max_n && !opt.force)
        throw guard_error("oracle: graph has " + std::to_string(g.vertex_count()) +
                          " vertices, guard is " + std::to_string(opt.max_n));
    detail::InducedCycleSearch search(g);
    search.run(true);
    std::optional<Hole> best;
    for (const auto& seq : search.holes()) {
        Hole cand{seq};
        if (!best || hole_less(cand, *best)) best = cand;
    }
    return Detection{DetectorTag::oracle, best};
}

/// Every minimum-length odd hole (canonical, deduplicated), for the
/// structural property tests that quantify over all shortest odd holes.
inline std::vector<Hole> brute_all_min_odd_holes(const Graph& g, const OracleOptions& opt = {}) {
    if (g.vertex_count() > opt.max_n && !opt.force)
        throw guard_error("oracle: graph exceeds the size guard");
    detail::InducedCycleSearch search(g);
    search.run(true);
    std::vector<Hole> out;
    for (const auto& seq : search.holes()) out.push_back(Hole{seq});
    std::sort(out.begin(), out.end(), hole_less);
    return out;
}

/// Independent second oracle (vertex-subset enumeration): minimum odd s >= 5
/// such that some s-subset induces a cycle. Practical only for n <= 9ish.
inline std::optional<int> brute_min_odd_hole_by_subsets(const Graph& g) {
    const int n = g.vertex_count();
    for (int size = 5; size <= n; size += 2) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[std::size_t(i)] = i;
        while (true) {
            VertexSet mask(n);
            for (int v : idx) mask.set(v);
            bool cycle = true;
            for (int v : idx) {
                if ((g.adjacency(v) & mask).count() != 2) {
                    cycle = false;
                    break;
                }
            }
            if (cycle) {
                // degree-2 everywhere: a disjoint union of cycles; connected iff one cycle
                std::vector<int> stack{idx[0]};
                VertexSet seen(n);
                seen.set(idx[0]);
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    VertexSet nb = g.adjacency(u) & mask;
                    nb.for_each([&](int w) {
                        if (!seen.test(w)) {
                            seen.set(w);
                            stack.push_back(w);
                        }
                    });
                }
                if (seen.count() == size) return size;
            }
            // next combination
            int i = size - 1;
            while (i >= 0 && idx[std::size_t(i)] == n - size + i) --i;
            if (i < 0) break;
            ++idx[std::size_t(i)];
            for (int j = i + 1; j < size; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

/// Exhaustive pyramid enumeration (apex, base triangle, constituent paths).
/// Base vertices are listed in increasing order; paths[i] ends at base[i].
inline std::vector<PyramidWitness> brute_find_pyramids(const Graph& g, const OracleOptions& opt = {.max_n = 12}) {
    const int n = g.vertex_count();
    if (n > opt.max_n && !opt.force) throw guard_error("brute_find_pyramids: graph exceeds the size guard");
    std::vector<PyramidWitness> out;

    // all induced a->target paths whose non-apex vertices avoid `banned` and
    // have no neighbor in `banned_adj` (except target hitting allowed_pairs)
    struct PathEnum {
        const Graph& g;
        int apex, target;
        const VertexSet* off_limits;      // vertices the path must avoid entirely (minus apex/target)
        const VertexSet* no_neighbors;    // non-apex path vertices may not see these...
        const VertexSet* target_allowed;  // ...except the target, which may see exactly these
        std::vector<int> cur;
        std::vector<std::vector<int>>* sink;

        void dfs(const VertexSet& used, const VertexSet& blocked) {
            int last = cur.back();
            for (int w : g.neighbors(last)) {
                if (used.test(w) || blocked.test(w)) continue;
                if (off_limits->test(w) && w != target) continue;
                if (w == target) {
                    VertexSet seen = g.adjacency(w) & *no_neighbors;
                    seen.subtract(*target_allowed);
                    if (seen.any()) continue;
                    cur.push_back(w);
                    sink->push_back(cur);
                    cur.pop_back();
                    continue;
                }
                if ((g.adjacency(w) & *no_neighbors).any()) continue;
                cur.push_back(w);
                VertexSet used2 = used;
                used2.set(w);
                VertexSet blocked2 = blocked;
                blocked2 |= g.adjacency(last);  // later vertices may not touch earlier ones
                dfs(used2, blocked2);
                cur.pop_back();
            }
        }
    };

    auto induced_paths = [&](int apex, int target, const VertexSet& off_limits, const VertexSet& no_neighbors,
                             const VertexSet& target_allowed) {
        std::vector<std::vector<int>> paths;
        PathEnum pe{g, apex, target, &off_limits, &no_neighbors, &target_allowed, {apex}, &paths};
        VertexSet used(n);
        used.set(apex);
        pe.dfs(used, VertexSet(n));
        return paths;
    };

    VertexSet empty(n);
    for (int b1 = 0; b1 < n; ++b1) {
        for (int b2 : g.neighbors(b1)) {
            if (b2 <= b1) continue;
            for (int b3 : g.neighbors(b2)) {
                if (b3 <= b2 || !g.adjacent(b1, b3)) continue;
                for (int a = 0; a < n; ++a) {
                    if (a == b1 || a == b2 || a == b3) continue;
                    VertexSet base_others(n);
                    base_others.set(b2);
                    base_others.set(b3);
                    auto p1s = induced_paths(a, b1, base_others, empty, empty);
                    for (const auto& p1 : p1s) {
                        VertexSet p1_wo_a(n);
                        for (int v : p1)
                            if (v != a) p1_wo_a.set(v);
                        VertexSet allowed_b2(n);
                        allowed_b2.set(b1);  // base edge b1b2 is the one permitted contact
                        VertexSet base3(n);
                        base3.set(b3);
                        VertexSet avoid2 = p1_wo_a | base3;
                        auto p2s = induced_paths(a, b2, avoid2, p1_wo_a, allowed_b2);
                        for (const auto& p2 : p2s) {
                            VertexSet p12_wo_a = p1_wo_a;
                            for (int v : p2)
                                if (v != a) p12_wo_a.set(v);
                            VertexSet allowed_b3(n);
                            allowed_b3.set(b1);
                            allowed_b3.set(b2);
                            auto p3s = induced_paths(a, b3, p12_wo_a, p12_wo_a, allowed_b3);
                            for (const auto& p3 : p3s) {
                                int long_paths = (p1.size() > 2) + (p2.size() > 2) + (p3.size() > 2);
                                if (long_paths < 2) continue;
                                PyramidWitness w;
                                w.apex = a;
                                w.base = {b1, b2, b3};
                                w.paths = {Path{p1}, Path{p2}, Path{p3}};
                                out.push_back(std::move(w));
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

/// Great pyramids among the brute-enumerated pyramids of g, every labeling
/// considered; min_len must be the oracle's minimum odd-hole length.
inline std::vector<GreatPyramidWitness> brute_find_great_pyramids(const Graph& g, int min_len,
                                                                  const OracleOptions& opt = {.max_n = 12}) {
    std::vector<GreatPyramidWitness> out;
    for (const PyramidWitness& w : brute_find_pyramids(g, opt)) {
        for (int k = 0; k < 3; ++k) {  // paths[k] plays P3
            int i = (k + 1) % 3, j = (k + 2) % 3;
            int lk = w.paths[std::size_t(k)].length();
            if (lk >= w.paths[std::size_t(i)].length() || lk >= w.paths[std::size_t(j)].length()) continue;
            GreatPyramidWitness gw;
            gw.pyramid.apex = w.apex;
            gw.pyramid.base = {w.base[std::size_t(i)], w.base[std::size_t(j)], w.base[std::size_t(k)]};
            gw.pyramid.paths = {w.paths[std::size_t(i)], w.paths[std::size_t(j)], w.paths[std::size_t(k)]};
            if (verify_great_pyramid(g, gw, min_len)) out.push_back(std::move(gw));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Instance generation

/// Deterministic splitmix64; gives bit-identical instances on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// uniform in [0,1) with 53 bits
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }
    /// uniform in [0,bound)
    int next_below(int bound) { return int(next() % std::uint64_t(bound)); }

private:
    std::uint64_t s_;
};

struct CycleSpec {
    int k = 5;
};
struct PlantedPyramidSpec {
    int l1 = 3, l2 = 3, l3 = 2;
    int ambient = 0;
    std::uint64_t seed = 0;
};
struct PlantedJewelSpec {
    int p_len = 4;
    int ambient = 0;
    std::uint64_t seed = 0;
};
struct RandomSpec {
    int n = 10;
    double p = 0.3;
    std::uint64_t seed = 0;
};
struct PlantedMajorSpec {
    int hole_len = 9;
    std::vector<std::vector<int>> major_patterns;  // hole positions each major attaches to
};
using InstanceSpec = std::variant<CycleSpec, PlantedPyramidSpec, PlantedJewelSpec, RandomSpec, PlantedMajorSpec>;

/// Generated graph plus the planted structure, when there is one.
struct GeneratedInstance {
    Graph graph{0};
    std::optional<Hole> planted_hole;
    std::optional<PyramidWitness> pyramid;
    std::optional<JewelWitness> jewel;
    std::optional<Tuple12> proof_tuple;  // the witness tuple for hinted runs
    std::vector<int> majors;
};

inline GeneratedInstance generate(const InstanceSpec& spec);

namespace detail {

inline GeneratedInstance gen_cycle(const CycleSpec& s) {
    if (s.k < 3) throw std::invalid_argument("cycle: length must be at least 3");
    Graph g(s.k);
    std::vector<int> seq(static_cast<std::size_t>(s.k));
    for (int i = 0; i < s.k; ++i) {
        g.add_edge(i, (i + 1) % s.k);
        seq[std::size_t(i)] = i;
    }
    GeneratedInstance out;
    out.graph = std::move(g);
    if (s.k >= 4) out.planted_hole = Hole{std::move(seq)};
    return out;
}

inline GeneratedInstance gen_random(const RandomSpec& s) {
    if (s.n < 0 || s.p < 0.0 || s.p > 1.0) throw std::invalid_argument("random: bad parameters");
    Graph g(s.n);
    SplitMix64 rng(s.seed);
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if (rng.next_unit() < s.p) g.add_edge(i, j);
    GeneratedInstance out;
    out.graph = std::move(g);
    return out;
}

// Noise vertices attach to at most two hole vertices, confined to a
// three-vertex arc, and never to each other, so no new triangle appears and
// every new cycle is even, a triangle, or as long as the hole itself. Windows
// containing both vertices of `banned_pair` are skipped: bridging the base
// edge of a planted pyramid would open an odd detour through its third path.
inline void add_hole_ambient(Graph& g, const std::vector<int>& hole, int count, SplitMix64& rng,
                             std::pair<int, int> banned_pair = {-1, -1}) {
    const int m = int(hole.size());
    auto window_banned = [&](int s) {
        if (banned_pair.first < 0) return false;
        bool first = false, second = false;
        for (int t = 0; t < 3; ++t) {
            int v = hole[std::size_t((s + t) % m)];
            first = first || v == banned_pair.first;
            second = second || v == banned_pair.second;
        }
        return first && second;
    };
    for (int i = 0; i < count; ++i) {
        int w = g.vertex_count() - count + i;
        int kind = rng.next_below(3);
        if (kind == 0) continue;  // isolated
        int s = rng.next_below(m);
        if (kind == 2) {
            while (window_banned(s)) s = (s + 1) % m;
            g.add_edge(w, hole[std::size_t(s)]);
            g.add_edge(w, hole[std::size_t((s + 2) % m)]);
        } else {
            g.add_edge(w, hole[std::size_t(s)]);
        }
    }
}

inline GeneratedInstance gen_planted_pyramid(const PlantedPyramidSpec& s) {
    if (s.l1 < 2 || s.l2 < 2 || s.l3 < 1) throw std::invalid_argument("planted_pyramid: paths too short");
    if (s.l3 >= s.l1 || s.l3 >= s.l2)
        throw std::invalid_argument("planted_pyramid: height must be strictly smaller than both long paths");
    if ((s.l1 % 2) != (s.l2 % 2)) throw std::invalid_argument("planted_pyramid: l1 and l2 must share parity");
    if ((s.l3 % 2) == (s.l1 % 2))
        throw std::invalid_argument("planted_pyramid: the short path must have the opposite parity");
    if (s.ambient < 0) throw std::invalid_argument("planted_pyramid: negative ambient");

    const int apex = 0;
    int next = 1;
    auto make_path = [&](int len, int endpoint) {
        std::vector<int> p{apex};
        for (int i = 1; i < len; ++i) p.push_back(next++);
        p.push_back(endpoint);
        return p;
    };
    int b1 = next + (s.l1 - 1) + (s.l2 - 1) + (s.l3 - 1);
    int b2 = b1 + 1, b3 = b1 + 2;
    std::vector<int> p1 = make_path(s.l1, b1);
    std::vector<int> p2 = make_path(s.l2, b2);
    std::vector<int> p3 = make_path(s.l3, b3);
    int n = b3 + 1 + s.ambient;
    Graph g(n);
    for (const auto& p : {p1, p2, p3})
        for (std::size_t i = 0; i + 1 < p.size(); ++i) g.add_edge(p[i], p[i + 1]);
    g.add_edge(b1, b2);
    g.add_edge(b2, b3);
    g.add_edge(b1, b3);

    GeneratedInstance out;
    out.pyramid = PyramidWitness{apex, {b1, b2, b3}, {Path{p1}, Path{p2}, Path{p3}}};
    std::vector<int> hole = p1;  // a..b1
    for (std::size_t i = p2.size(); i-- > 1;) hole.push_back(p2[i]);
    out.planted_hole = Hole{hole};

    SplitMix64 rng(s.seed);
    add_hole_ambient(g, hole, s.ambient, rng, {b1, b2});
    if (!verify_pyramid(g, *out.pyramid)) throw std::logic_error("planted_pyramid: construction failed its verifier");

    // the witness tuple: bare instances have no big majors, so the
    // five-tuple degenerates to b1
    Tuple12 t{};
    t.a = apex;
    t.b1 = b1;
    t.b2 = b2;
    t.b3 = b3;
    t.v = t.v1 = t.v2 = t.v3 = t.v4 = b1;
    int mid = (s.l2 + 1) / 2;  // subpath a..m2 along P2 has length ceil(l2/2)
    t.m2 = p2[std::size_t(mid)];
    if (s.l2 >= 2 * s.l3) {
        t.c2 = p2[std::size_t(s.l3)];
        t.d2 = p2[std::size_t(s.l2 - s.l3)];
    } else {
        t.c2 = t.d2 = t.m2;
    }
    out.proof_tuple = t;
    out.graph = std::move(g);
    return out;
}

inline GeneratedInstance gen_planted_jewel(const PlantedJewelSpec& s) {
    if (s.p_len < 2) throw std::invalid_argument("planted_jewel: path length must be at least 2");
    if (s.ambient < 0) throw std::invalid_argument("planted_jewel: negative ambient");
    // ring 0..4 (v1..v5) with both optional chords v5v2, v5v3 present, plus an
    // induced v1-v4 path through fresh vertices
    const int v1 = 0, v2 = 1, v3 = 2, v4 = 3, v5 = 4;
    int n = 5 + (s.p_len - 1) + s.ambient;
    Graph g(n);
    g.add_edge(v1, v2);
    g.add_edge(v2, v3);
    g.add_edge(v3, v4);
    g.add_edge(v4, v5);
    g.add_edge(v5, v1);
    g.add_edge(v5, v2);
    g.add_edge(v5, v3);
    std::vector<int> path{v1};
    for (int i = 0; i < s.p_len - 1; ++i) path.push_back(5 + i);
    path.push_back(v4);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) g.add_edge(path[i], path[i + 1]);

    GeneratedInstance out;
    out.jewel = JewelWitness{{v1, v2, v3, v4, v5}, Path{path}};
    if (!verify_jewel(g, *out.jewel)) throw std::logic_error("planted_jewel: construction failed its verifier");

    SplitMix64 rng(s.seed);
    for (int i = 0; i < s.ambient; ++i) {
        int w = n - s.ambient + i;
        if (rng.next_below(2) == 1) g.add_edge(w, rng.next_below(5));  // degree <= 1 stays off every cycle
    }
    out.graph = std::move(g);
    return out;
}

inline GeneratedInstance gen_planted_major(const PlantedMajorSpec& s) {
    if (s.hole_len < 5 || s.hole_len % 2 == 0)
        throw std::invalid_argument("planted_major: hole length must be odd and at least 5");
    const int k = s.hole_len;
    int n = k + int(s.major_patterns.size());
    Graph g(n);
    std::vector<int> hole(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, (i + 1) % k);
        hole[std::size_t(i)] = i;
    }
    GeneratedInstance out;
    out.planted_hole = Hole{hole};
    for (std::size_t mi = 0; mi < s.major_patterns.size(); ++mi) {
        int w = k + int(mi);
        const auto& pattern = s.major_patterns[mi];
        if (pattern.empty()) throw std::invalid_argument("planted_major: empty pattern");
        for (int pos : pattern) {
            if (pos < 0 || pos >= k) throw std::invalid_argument("planted_major: pattern index out of range");
            g.add_edge(w, pos);
        }
        MajorClass mc = classify_major(g, *out.planted_hole, w);
        if (!mc.is_major) throw std::invalid_argument("planted_major: pattern does not make the vertex major");
        out.majors.push_back(w);
    }
    out.graph = std::move(g);
    return out;
}

}  // namespace detail

inline GeneratedInstance generate(const InstanceSpec& spec) {
    return std::visit(
        [](const auto& s) -> GeneratedInstance {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CycleSpec>) return detail::gen_cycle(s);
            if constexpr (std::is_same_v<T, RandomSpec>) return detail::gen_random(s);
            if constexpr (std::is_same_v<T, PlantedPyramidSpec>) return detail::gen_planted_pyramid(s);
            if constexpr (std::is_same_v<T, PlantedJewelSpec>) return detail::gen_planted_jewel(s);
            if constexpr (std::is_same_v<T, PlantedMajorSpec>) return detail::gen_planted_major(s);
        },
        spec);
}

}  // namespace oddhole
