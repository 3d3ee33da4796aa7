#include <catch_amalgamated.hpp>

#include "oddhole/pipeline.hpp"
#include "test_util.hpp"

using namespace oddhole;
using testutil::complete;
using testutil::cycle;
using testutil::petersen;
using testutil::random_graph;

TEST_CASE("odd cycles C5..C13") {
    for (int k = 2; k <= 6; ++k) {
        PipelineResult r = shortest_odd_hole(cycle(2 * k + 1));
        REQUIRE(r.has_odd_hole);
        CHECK(*r.min_length == 2 * k + 1);
        CHECK(is_hole(cycle(2 * k + 1), *r.hole));
    }
}

TEST_CASE("graphs with no odd hole") {
    SECTION("bipartite") {
        CHECK_FALSE(shortest_odd_hole(cycle(8)).has_odd_hole);
        Graph k34(7);
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 7; ++j) k34.add_edge(i, j);
        CHECK_FALSE(shortest_odd_hole(k34).has_odd_hole);
    }
    SECTION("forest") {
        Graph g(7);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(4, 5);
        CHECK_FALSE(shortest_odd_hole(g).has_odd_hole);
    }
    SECTION("chordal / complete") {
        CHECK_FALSE(shortest_odd_hole(complete(6)).has_odd_hole);
        Graph g = complete(4);  // plus a pendant triangle fan
        CHECK_FALSE(shortest_odd_hole(g).has_odd_hole);
    }
}

TEST_CASE("Petersen: minimum five via the 5-hole stage") {
    PipelineResult r = shortest_odd_hole(petersen());
    REQUIRE(r.has_odd_hole);
    CHECK(*r.min_length == 5);
    CHECK(*r.detector == DetectorTag::five_hole);
    CHECK(r.timings.size() == 1);  // later stages were cut off
}

TEST_CASE("planted great pyramid goes through the pipeline") {
    GeneratedInstance inst = generate(PlantedPyramidSpec{3, 3, 2, 0, 0});
    PipelineResult r = shortest_odd_hole(inst.graph);
    REQUIRE(r.has_odd_hole);
    CHECK(*r.min_length == 7);
}

TEST_CASE("hinted tuples drive the great-pyramid stage") {
    GeneratedInstance inst = generate(PlantedPyramidSpec{5, 5, 2, 0, 0});  // 13 vertices, above the full guard
    std::vector<Tuple12> tuples{*inst.proof_tuple};
    PipelineOptions opt;
    opt.hinted_tuples = &tuples;
    PipelineResult r = shortest_odd_hole(inst.graph, opt);
    REQUIRE(r.has_odd_hole);
    CHECK(*r.min_length == 11);
    CHECK(r.ran(DetectorTag::great_pyramid));
}

TEST_CASE("the size guard skips full enumeration and reports which detectors ran") {
    GeneratedInstance inst = generate(PlantedPyramidSpec{5, 5, 2, 0, 0});
    PipelineOptions opt;
    opt.locator_full_max_n = 10;  // 13 vertices: stage skipped
    PipelineResult r = shortest_odd_hole(inst.graph, opt);
    CHECK_FALSE(r.ran(DetectorTag::great_pyramid));
    PipelineOptions wide;
    wide.locator_full_max_n = 13;
    PipelineResult r2 = shortest_odd_hole(inst.graph, wide);
    CHECK(r2.ran(DetectorTag::great_pyramid));
    REQUIRE(r2.has_odd_hole);
    CHECK(*r2.min_length == 11);
}

TEST_CASE("oracle equivalence on a random sample") {
    SplitMix64 rng(606);
    for (int it = 0; it < 120; ++it) {
        Graph g = random_graph(5 + rng.next_below(6), 0.15 + 0.1 * double(rng.next_below(4)), rng.next());
        PipelineResult r = shortest_odd_hole(g);
        Detection o = brute_shortest_odd_hole(g);
        CAPTURE(it, g.vertex_count(), g.edge_count());
        REQUIRE(r.has_odd_hole == o.found());
        if (o.found()) CHECK(*r.min_length == o.length());
        if (r.has_odd_hole) CHECK(is_hole(g, *r.hole));
    }
}

TEST_CASE("determinism: identical runs, identical witness") {
    SplitMix64 rng(7070);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(9, 0.35, rng.next());
        PipelineResult a = shortest_odd_hole(g);
        PipelineResult b = shortest_odd_hole(g);
        CHECK(a.has_odd_hole == b.has_odd_hole);
        if (a.has_odd_hole) {
            CHECK(*a.min_length == *b.min_length);
            CHECK(a.hole->vertices == b.hole->vertices);
            CHECK(*a.detector == *b.detector);
        }
    }
}
