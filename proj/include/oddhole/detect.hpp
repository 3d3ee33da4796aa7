#pragma once

#include "oddhole/structure.hpp"

namespace oddhole {

enum class DetectorTag { five_hole, jewel, great_pyramid, no_great_pyramid, oracle };

inline const char* to_string(DetectorTag t) {
    switch (t) {
        case DetectorTag::five_hole: return "five_hole";
        case DetectorTag::jewel: return "jewel";
        case DetectorTag::great_pyramid: return "great_pyramid";
        case DetectorTag::no_great_pyramid: return "no_great_pyramid";
        case DetectorTag::oracle: return "oracle";
    }
    return "?";
}

/// Detector outcome: either a recorded odd hole (induced, odd, length >= 5)
/// plus the detector that produced it, or failure.
struct Detection {
    DetectorTag tag = DetectorTag::oracle;
    std::optional<Hole> hole;

    bool found() const { return hole.has_value(); }
    int length() const { return hole->length(); }

    static Detection failure(DetectorTag t) { return Detection{t, std::nullopt}; }
};

/// Keeps the minimum candidate under (length, canonical sequence). offer()
/// validates every candidate as a genuine odd hole of g and silently drops
/// the rest, so recorded holes are sound no matter how they were assembled.
class HoleRecorder {
public:
    bool offer(const Graph& g, const std::vector<int>& seq) {
        if (seq.size() < 5 || seq.size() % 2 == 0) return false;
        if (!is_hole(g, seq)) return false;
        Hole h{canonical_cycle(seq)};
        if (!best_ || hole_less(h, *best_)) best_ = std::move(h);
        return true;
    }

    /// Same validation, but a rejected candidate is a logic error. Used when
    /// re-validating holes lifted out of a cleaned subgraph, which are holes
    /// of the parent by construction.
    void offer_or_throw(const Graph& g, const std::vector<int>& seq) {
        if (!offer(g, seq)) throw std::logic_error("hole recorder: candidate failed re-validation");
    }

    bool merge(const Detection& d) {
        if (!d.found()) return false;
        Hole h = canonical_hole(*d.hole);
        if (!best_ || hole_less(h, *best_)) best_ = std::move(h);
        return true;
    }

    const std::optional<Hole>& best() const { return best_; }

    Detection detection(DetectorTag t) const {
        Detection d{t, best_};
        return d;
    }

private:
    std::optional<Hole> best_;
};

/// Exhaustive 5-hole search. A 5-hole is automatically a shortest odd hole.
/// Tuples are tried in lexicographic order over neighborhoods, so the first
/// hit is the lexicographically least 5-tuple that induces a C5.
inline Detection find_5hole(const Graph& g) {
    const int n = g.vertex_count();
    VertexSet cand(n);
    for (int a = 0; a < n; ++a) {
        for (int b : g.neighbors(a)) {
            for (int c : g.neighbors(b)) {
                if (c == a || g.adjacent(a, c)) continue;
                for (int d : g.neighbors(c)) {
                    if (d == a || d == b) continue;
                    if (g.adjacent(d, a) || g.adjacent(d, b)) continue;
                    // e: common neighbor of d and a, nonadjacent to b and c
                    cand = g.adjacency(d);
                    cand &= g.adjacency(a);
                    cand.subtract(g.adjacency(b));
                    cand.subtract(g.adjacency(c));
                    cand.reset(b);  // b,c already excluded by nonadjacency, a,d by irreflexivity
                    int e = cand.lowest();
                    if (e >= 0) {
                        Detection out{DetectorTag::five_hole, Hole{{a, b, c, d, e}}};
                        return out;
                    }
                }
            }
        }
    }
    return Detection::failure(DetectorTag::five_hole);
}

/// Shortest jewelled odd hole search. Enumerates five-tuples (c1..c5) with
/// c1-c2-c4-c5 an induced path and c3 adjacent to c1 and c5; for each, takes
/// a minimum-length c1-c5 path whose interior carries no neighbor of
/// c2, c3 or c4, and records the odd closure: through c2-c4 when the total is
/// odd that way, through c3 otherwise. Degenerate tuples (the path reusing
/// c3, overlaps with the ring) simply fail hole validation and are skipped.
/// If some shortest odd hole of g is jewelled, the result has minimum length.
inline Detection find_jewelled(const Graph& g) {
    const int n = g.vertex_count();
    HoleRecorder rec;
    VertexSet forb(n);
    for (int c1 = 0; c1 < n; ++c1) {
        for (int c2 : g.neighbors(c1)) {
            for (int c4 : g.neighbors(c2)) {
                if (c4 == c1 || g.adjacent(c4, c1)) continue;
                for (int c5 : g.neighbors(c4)) {
                    if (c5 <= c1) continue;  // mirrored tuple covers the rest
                    if (c5 == c2 || g.adjacent(c5, c1) || g.adjacent(c5, c2)) continue;
                    VertexSet c3s = g.adjacency(c1) & g.adjacency(c5);
                    c3s.for_each([&](int c3) {
                        forb = g.adjacency(c2);
                        forb |= g.adjacency(c3);
                        forb |= g.adjacency(c4);
                        auto p = shortest_path_avoiding(g, c1, c5, forb);
                        if (!p) return;
                        // closure through c2,c4: c1-c2-c4-c5-P-c1
                        std::vector<int> seq{c1, c2, c4, c5};
                        for (std::size_t i = p->vertices.size() - 1; i-- > 1;) seq.push_back(p->vertices[i]);
                        rec.offer(g, seq);
                        // closure through c3: c1-c3-c5-P-c1
                        std::vector<int> seq2{c1, c3, c5};
                        for (std::size_t i = p->vertices.size() - 1; i-- > 1;) seq2.push_back(p->vertices[i]);
                        rec.offer(g, seq2);
                    });
                }
            }
        }
    }
    return rec.detection(DetectorTag::jewel);
}

}  // namespace oddhole
