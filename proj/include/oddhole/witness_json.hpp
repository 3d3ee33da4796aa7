#pragma once

#include <json.hpp>

#include "oddhole/locator.hpp"
#include "oddhole/pipeline.hpp"

namespace oddhole {

using nlohmann::json;

// -- witness files -----------------------------------------------------------
//
// {"type":"pyramid","apex":a,"base":[b1,b2,b3],"paths":[[..],[..],[..]]}
// {"type":"jewel","ring":[v1..v5],"path":[..]}
// {"type":"hole","vertices":[..]}
//
// Extra keys are ignored, so generator sidecars can carry more context.

struct WitnessFile {
    std::string type;
    PyramidWitness pyramid;
    JewelWitness jewel;
    Hole hole;
};

inline json to_json(const PyramidWitness& w) {
    json paths = json::array();
    for (const Path& p : w.paths) paths.push_back(p.vertices);
    return json{{"type", "pyramid"}, {"apex", w.apex}, {"base", {w.base[0], w.base[1], w.base[2]}}, {"paths", paths}};
}

inline json to_json(const JewelWitness& w) {
    return json{{"type", "jewel"},
                {"ring", {w.ring[0], w.ring[1], w.ring[2], w.ring[3], w.ring[4]}},
                {"path", w.path.vertices}};
}

inline json hole_to_json(const Hole& h) { return json{{"type", "hole"}, {"vertices", h.vertices}}; }

inline WitnessFile parse_witness(const json& j) {
    WitnessFile out;
    try {
        out.type = j.at("type").get<std::string>();
        if (out.type == "pyramid") {
            out.pyramid.apex = j.at("apex").get<int>();
            auto base = j.at("base");
            auto paths = j.at("paths");
            if (base.size() != 3 || paths.size() != 3) throw parse_error("witness: pyramid needs 3 base vertices and 3 paths");
            for (int i = 0; i < 3; ++i) {
                out.pyramid.base[std::size_t(i)] = base.at(std::size_t(i)).get<int>();
                out.pyramid.paths[std::size_t(i)].vertices = paths.at(std::size_t(i)).get<std::vector<int>>();
            }
        } else if (out.type == "jewel") {
            auto ring = j.at("ring");
            if (ring.size() != 5) throw parse_error("witness: jewel ring needs 5 vertices");
            for (int i = 0; i < 5; ++i) out.jewel.ring[std::size_t(i)] = ring.at(std::size_t(i)).get<int>();
            out.jewel.path.vertices = j.at("path").get<std::vector<int>>();
        } else if (out.type == "hole") {
            out.hole.vertices = j.at("vertices").get<std::vector<int>>();
        } else {
            throw parse_error("witness: unknown type '" + out.type + "'");
        }
    } catch (const json::exception& e) {
        throw parse_error(std::string("witness: ") + e.what());
    }
    return out;
}

/// Runs the matching verifier. Hole witnesses must be odd holes.
inline CheckResult check_witness(const Graph& g, const WitnessFile& w) {
    if (w.type == "pyramid") return check_pyramid(g, w.pyramid);
    if (w.type == "jewel") return check_jewel(g, w.jewel);
    if (!is_hole(g, w.hole.vertices)) return CheckResult::fail("not an induced cycle");
    if (!w.hole.odd()) return CheckResult::fail("even length");
    return CheckResult::pass();
}

// -- hinted tuple streams ----------------------------------------------------
//
// JSON lines, one twelve-element array [a,b1,b2,b3,c2,d2,m2,v,v1,v2,v3,v4]
// per line. Blank lines and '#' comments are skipped.

inline std::vector<Tuple12> parse_tuple_stream(std::istream& in) {
    std::vector<Tuple12> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_array() || j.size() != 12)
            throw parse_error("tuples line " + std::to_string(lineno) + ": expected a 12-element array");
        std::array<int, 12> x{};
        for (std::size_t i = 0; i < 12; ++i) x[i] = j.at(i).get<int>();
        out.push_back(Tuple12{x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7], x[8], x[9], x[10], x[11]});
    }
    return out;
}

inline json to_json(const Tuple12& t) {
    return json::array({t.a, t.b1, t.b2, t.b3, t.c2, t.d2, t.m2, t.v, t.v1, t.v2, t.v3, t.v4});
}

// -- run reports -------------------------------------------------------------

/// Stable report schema shared by the pipeline, the oracle and single
/// detectors: keys has_odd_hole, min_length, hole, detector, timings,
/// graph{n,m}. Timings carry one entry per detector that ran and are the only
/// part excluded from golden comparisons.
inline json report_json(const Graph& g, const PipelineResult& r) {
    json timings = json::object();
    for (const auto& t : r.timings) timings[to_string(t.detector)] = t.milliseconds;
    json out{{"has_odd_hole", r.has_odd_hole},
             {"min_length", nullptr},
             {"hole", nullptr},
             {"detector", nullptr},
             {"timings", timings},
             {"graph", {{"n", g.vertex_count()}, {"m", g.edge_count()}}}};
    if (r.min_length) out["min_length"] = *r.min_length;
    if (r.hole) out["hole"] = canonical_cycle(r.hole->vertices);
    if (r.detector) out["detector"] = to_string(*r.detector);
    return out;
}

inline PipelineResult detection_as_result(const Detection& d, double elapsed_ms) {
    PipelineResult r;
    r.timings.push_back({d.tag, elapsed_ms});
    if (d.found()) {
        r.has_odd_hole = true;
        r.min_length = d.hole->length();
        r.hole = canonical_hole(*d.hole);
        r.detector = d.tag;
    }
    return r;
}

inline std::string report_text(const Graph& g, const PipelineResult& r) {
    std::string out;
    out += "graph: n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + "\n";
    if (r.has_odd_hole) {
        out += "has_odd_hole: true\n";
        out += "min_length: " + std::to_string(*r.min_length) + "\n";
        out += "hole:";
        for (int v : canonical_cycle(r.hole->vertices)) out += " " + std::to_string(v);
        out += "\n";
        out += "detector: " + std::string(to_string(*r.detector)) + "\n";
    } else {
        out += "has_odd_hole: false\n";
    }
    for (const auto& t : r.timings)
        out += std::string("time_ms ") + to_string(t.detector) + ": " + std::to_string(t.milliseconds) + "\n";
    return out;
}

}  // namespace oddhole
