// Command-line surface for the odd-hole toolkit: pipeline / oracle / single
// detectors over edge-list, DIMACS or graph6 inputs, instance generation with
// witness sidecars, witness checking, and hinted locator runs.
//
// Exit codes: 0 ok (including "no odd hole" and failed witness checks),
// 2 parse error, 3 size-guard refusal.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "oddhole/io.hpp"
#include "oddhole/oracle.hpp"
#include "oddhole/witness_json.hpp"

namespace {

using namespace oddhole;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;

int env_override(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        return fallback;
    }
}

GraphFormat pick_format(const std::string& requested, const std::string& path) {
    if (!requested.empty()) {
        auto f = graph_format_from_name(requested);
        if (!f) throw parse_error("unknown format '" + requested + "'");
        return *f;
    }
    auto ends_with = [&](const char* suf) {
        std::string s(suf);
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".g6") || ends_with(".graph6")) return GraphFormat::graph6;
    if (ends_with(".col") || ends_with(".dimacs")) return GraphFormat::dimacs;
    return GraphFormat::edgelist;
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_graph(in, pick_format(format, path));
}

void print_report(const Graph& g, const PipelineResult& r, const std::string& output) {
    if (output == "text")
        std::cout << report_text(g, r);
    else
        std::cout << report_json(g, r).dump() << "\n";
}

struct GenResult {
    GeneratedInstance inst;
    json sidecar;
};

GenResult run_gen(const std::string& family, const std::vector<std::string>& args, int ambient,
                  std::uint64_t seed, const std::vector<std::string>& patterns) {
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw CLI::ValidationError("gen", family + " expects " + std::to_string(k) + " positional parameter(s)");
    };
    GenResult out;
    if (family == "cycle") {
        need(1);
        out.inst = generate(CycleSpec{std::stoi(args[0])});
        out.sidecar = hole_to_json(*out.inst.planted_hole);
    } else if (family == "planted_pyramid") {
        need(3);
        PlantedPyramidSpec spec{std::stoi(args[0]), std::stoi(args[1]), std::stoi(args[2]), ambient, seed};
        out.inst = generate(spec);
        out.sidecar = to_json(*out.inst.pyramid);
        out.sidecar["hole"] = out.inst.planted_hole->vertices;
        out.sidecar["tuple12"] = to_json(*out.inst.proof_tuple);
    } else if (family == "planted_jewel") {
        need(1);
        PlantedJewelSpec spec{std::stoi(args[0]), ambient, seed};
        out.inst = generate(spec);
        out.sidecar = to_json(*out.inst.jewel);
    } else if (family == "random") {
        need(2);
        RandomSpec spec{std::stoi(args[0]), std::stod(args[1]), seed};
        out.inst = generate(spec);
        out.sidecar = json{{"type", "random"}, {"n", spec.n}, {"p", spec.p}, {"seed", spec.seed}};
    } else if (family == "planted_major") {
        need(1);
        PlantedMajorSpec spec;
        spec.hole_len = std::stoi(args[0]);
        for (const std::string& pat : patterns) {
            std::vector<int> idx;
            std::istringstream ss(pat);
            std::string tok;
            while (std::getline(ss, tok, ',')) idx.push_back(std::stoi(tok));
            spec.major_patterns.push_back(std::move(idx));
        }
        out.inst = generate(spec);
        out.sidecar = hole_to_json(*out.inst.planted_hole);
        out.sidecar["majors"] = out.inst.majors;
    } else {
        throw CLI::ValidationError("gen", "unknown family '" + family + "'");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd-hole detection toolkit"};
    app.require_subcommand(1);

    std::string graph_path, format, output = "json", tuples_path, witness_path, out_path;
    std::string detector;
    int locator_full_max = env_override("ODDHOLE_LOCATOR_FULL_MAX", 10);
    int oracle_max = env_override("ODDHOLE_ORACLE_MAX", 16);
    bool force = false;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("graph", graph_path, "input graph file")->required();
        cmd->add_option("--format", format, "edgelist|dimacs|graph6 (default: by extension)");
        cmd->add_option("--output", output, "json|text")->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* run = app.add_subcommand("run", "run the shortest-odd-hole pipeline");
    add_graph_opts(run);
    run->add_option("--detector", detector,
                    "run a single detector instead: five_hole|jewel|no_great_pyramid|great_pyramid");
    run->add_option("--tuples", tuples_path, "tuple stream: great-pyramid stage runs in hinted mode");
    run->add_option("--locator-full-max", locator_full_max, "full locator size guard (vertices)");
    run->add_flag("--force", force, "ignore size guards");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
    add_graph_opts(oracle_cmd);
    oracle_cmd->add_option("--oracle-max", oracle_max, "oracle size guard (vertices)");
    oracle_cmd->add_flag("--force", force, "ignore size guards");

    std::string family;
    std::vector<std::string> gen_args, gen_patterns;
    int ambient = 0;
    std::uint64_t seed = 0;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("family", family, "cycle|planted_pyramid|planted_jewel|random|planted_major")->required();
    gen->add_option("params", gen_args, "family parameters");
    gen->add_option("--ambient", ambient, "ambient noise vertices");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--pattern", gen_patterns, "planted_major: comma-separated hole positions (repeatable)");
    gen->add_option("--out", out_path, "write edge list here plus <out>.witness.json sidecar");

    CLI::App* check = app.add_subcommand("check-witness", "validate a witness file against a graph");
    check->add_option("graph", graph_path, "input graph file")->required();
    check->add_option("witness", witness_path, "witness json")->required();
    check->add_option("--format", format, "edgelist|dimacs|graph6");
    check->add_option("--output", output, "json|text")->check(CLI::IsMember({"json", "text"}));

    CLI::App* hinted = app.add_subcommand("hinted-tuples", "run the great-pyramid locator on a tuple stream");
    hinted->add_option("graph", graph_path, "input graph file")->required();
    hinted->add_option("tuples", tuples_path, "json-lines tuple stream")->required();
    hinted->add_option("--format", format, "edgelist|dimacs|graph6");
    hinted->add_option("--output", output, "json|text")->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            Graph g = load_graph(graph_path, format);
            std::vector<Tuple12> tuples;
            PipelineOptions opt;
            opt.locator_full_max_n = force ? g.vertex_count() : locator_full_max;
            if (!tuples_path.empty()) {
                std::ifstream in(tuples_path);
                if (!in) throw parse_error("cannot open '" + tuples_path + "'");
                tuples = parse_tuple_stream(in);
                opt.hinted_tuples = &tuples;
            }
            if (detector.empty()) {
                print_report(g, shortest_odd_hole(g, opt), output);
            } else {
                auto t0 = std::chrono::steady_clock::now();
                Detection d;
                if (detector == "five_hole") {
                    d = find_5hole(g);
                } else if (detector == "jewel") {
                    d = find_jewelled(g);
                } else if (detector == "no_great_pyramid") {
                    d = no_great_pyramid_solver(g);
                } else if (detector == "great_pyramid") {
                    if (opt.hinted_tuples) {
                        d = find_great_pyramid_hinted(g, tuples);
                    } else {
                        if (g.vertex_count() > opt.locator_full_max_n)
                            throw guard_error("full locator guard is " + std::to_string(opt.locator_full_max_n) +
                                              " vertices (use --force or --locator-full-max)");
                        d = find_great_pyramid(g);
                    }
                } else {
                    throw parse_error("unknown detector '" + detector + "'");
                }
                auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
                print_report(g, detection_as_result(d, ms.count()), output);
            }
        } else if (oracle_cmd->parsed()) {
            Graph g = load_graph(graph_path, format);
            auto t0 = std::chrono::steady_clock::now();
            Detection d = brute_shortest_odd_hole(g, OracleOptions{oracle_max, force});
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
            print_report(g, detection_as_result(d, ms.count()), output);
        } else if (gen->parsed()) {
            GenResult r = run_gen(family, gen_args, ambient, seed, gen_patterns);
            if (out_path.empty()) {
                write_edgelist(std::cout, r.inst.graph);
            } else {
                std::ofstream out(out_path);
                if (!out) throw parse_error("cannot open '" + out_path + "' for writing");
                write_edgelist(out, r.inst.graph);
                std::ofstream side(out_path + ".witness.json");
                side << r.sidecar.dump(2) << "\n";
            }
        } else if (check->parsed()) {
            Graph g = load_graph(graph_path, format);
            std::ifstream in(witness_path);
            if (!in) throw parse_error("cannot open '" + witness_path + "'");
            json j = json::parse(in, nullptr, false);
            if (j.is_discarded()) throw parse_error("witness: invalid json");
            CheckResult res = check_witness(g, parse_witness(j));
            if (output == "text")
                std::cout << (res.ok ? "valid" : "invalid: " + res.reason) << "\n";
            else
                std::cout << json{{"valid", res.ok}, {"reason", res.reason}}.dump() << "\n";
        } else if (hinted->parsed()) {
            Graph g = load_graph(graph_path, format);
            std::ifstream in(tuples_path);
            if (!in) throw parse_error("cannot open '" + tuples_path + "'");
            std::vector<Tuple12> tuples = parse_tuple_stream(in);
            auto t0 = std::chrono::steady_clock::now();
            Detection d = find_great_pyramid_hinted(g, tuples);
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
            print_report(g, detection_as_result(d, ms.count()), output);
        }
    } catch (const guard_error& e) {
        std::cerr << "guard refusal: " << e.what() << "\n";
        return kExitGuard;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
