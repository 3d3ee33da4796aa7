#pragma once

#include <chrono>

#include "oddhole/cleaning.hpp"
#include "oddhole/locator.hpp"

namespace oddhole {

struct PipelineOptions {
    /// Full-mode great-pyramid enumeration is skipped on graphs with more
    /// vertices than this; the result then reports which detectors ran.
    int locator_full_max_n = 10;
    /// When set, the great-pyramid stage runs in hinted mode on this tuple
    /// stream instead of full enumeration (no size bound applies).
    const std::vector<Tuple12>* hinted_tuples = nullptr;
    /// Stop as soon as the recorded minimum is provably optimal (a 5-hole, or
    /// length 7 after the exhaustive 5-hole stage failed).
    bool short_circuit = true;
};

struct PipelineResult {
    bool has_odd_hole = false;
    std::optional<int> min_length;
    std::optional<Hole> hole;
    std::optional<DetectorTag> detector;
    struct Timing {
        DetectorTag detector;
        double milliseconds;
    };
    std::vector<Timing> timings;  // one entry per detector that ran, in run order

    bool ran(DetectorTag t) const {
        for (const Timing& e : timings)
            if (e.detector == t) return true;
        return false;
    }
};

/// Top-level algorithm: run the four detectors and return the shortest
/// recorded hole, or report that no odd hole exists. Detectors run cheapest
/// first; the tie-break across detectors is (length, canonical sequence),
/// then run order.
inline PipelineResult shortest_odd_hole(const Graph& g, const PipelineOptions& opt = {}) {
    PipelineResult out;
    std::optional<Hole> best;
    std::optional<DetectorTag> best_tag;

    auto consider = [&](const Detection& d) {
        if (!d.found()) return;
        Hole h = canonical_hole(*d.hole);
        if (!best || hole_less(h, *best)) {
            best = std::move(h);
            best_tag = d.tag;
        }
    };
    auto run = [&](DetectorTag tag, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        consider(fn());
        auto t1 = std::chrono::steady_clock::now();
        out.timings.push_back({tag, std::chrono::duration<double, std::milli>(t1 - t0).count()});
    };

    run(DetectorTag::five_hole, [&] { return find_5hole(g); });
    // A 5-hole is globally minimal; afterwards the exhaustive failure of the
    // 5-hole stage certifies that length 7 cannot be beaten either.
    bool done = opt.short_circuit && best && best->length() == 5;
    if (!done) {
        run(DetectorTag::jewel, [&] { return find_jewelled(g); });
        done = opt.short_circuit && best && best->length() == 7;
    }
    if (!done) {
        run(DetectorTag::no_great_pyramid, [&] { return no_great_pyramid_solver(g); });
        done = opt.short_circuit && best && best->length() == 7;
    }
    if (!done) {
        if (opt.hinted_tuples) {
            run(DetectorTag::great_pyramid, [&] { return find_great_pyramid_hinted(g, *opt.hinted_tuples); });
        } else if (g.vertex_count() <= opt.locator_full_max_n) {
            run(DetectorTag::great_pyramid, [&] { return find_great_pyramid(g); });
        }
    }

    if (best) {
        out.has_odd_hole = true;
        out.min_length = best->length();
        out.hole = std::move(best);
        out.detector = best_tag;
    }
    return out;
}

}  // namespace oddhole
