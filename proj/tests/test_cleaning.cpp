#include <catch_amalgamated.hpp>

#include "oddhole/cleaning.hpp"
#include "test_util.hpp"

using namespace oddhole;
using testutil::cycle;
using testutil::random_graph;

namespace {

Graph cycle_plus_pattern(int k, const std::vector<std::vector<int>>& patterns) {
    Graph g(k + int(patterns.size()));
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    for (std::size_t m = 0; m < patterns.size(); ++m)
        for (int p : patterns[m]) g.add_edge(k + int(m), p);
    return g;
}

Hole hole_of(int k) {
    std::vector<int> seq;
    for (int i = 0; i < k; ++i) seq.push_back(i);
    return Hole{seq};
}

}  // namespace

TEST_CASE("test_clean") {
    SECTION("bare odd cycles are clean") {
        CHECK(test_clean(cycle(7)).length() == 7);
        CHECK(test_clean(cycle(9)).length() == 9);
    }
    SECTION("isolated vertices change nothing") {
        Graph g(9);
        for (int i = 0; i < 7; ++i) g.add_edge(i, (i + 1) % 7);
        CHECK(test_clean(g).length() == 7);
    }
    SECTION("no odd cycle, no hole") {
        CHECK_FALSE(test_clean(cycle(6)).found());
        CHECK_FALSE(test_clean(Graph(4)).found());
    }
}

TEST_CASE("test_cleanable") {
    SECTION("big major with consecutive spread; the heavy edge removes it") {
        // gaps 1,2,2,4 keep every new cycle even or a triangle
        Graph g = cycle_plus_pattern(9, {{0, 1, 3, 5}});
        MajorClass mc = classify_major(g, hole_of(9), 9);
        REQUIRE((mc.is_major && mc.big));
        Detection o = brute_shortest_odd_hole(g);
        REQUIRE(o.length() == 9);
        // the 4-path 8-0-1-2 yields exactly X = {9}
        VertexSet x = g.adjacency(0) | g.adjacency(1);
        x.reset(8);
        x.reset(0);
        x.reset(1);
        x.reset(2);
        CHECK(x.count() == 1);
        CHECK(x.test(9));
        CHECK(test_cleanable(g).length() == 9);
    }
    SECTION("spec's spread-major layout: a five-hole appears and wins") {
        Graph g = cycle_plus_pattern(9, {{0, 1, 4, 5}});
        Detection o = brute_shortest_odd_hole(g);
        REQUIRE(o.length() == 5);  // the major vertex plus the 1..4 arc
        CHECK(test_cleanable(g).length() == 5);
    }
    SECTION("bare C7: some 4-path deletes nothing essential") { CHECK(test_cleanable(cycle(7)).length() == 7); }
    SECTION("bipartite failure") {
        Graph g(6);
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) g.add_edge(i, j);
        CHECK_FALSE(test_cleanable(g).found());
    }
    SECTION("no induced 4-path: falls back to the plain clean test") {
        CHECK_FALSE(test_cleanable(testutil::complete(6)).found());
        CHECK_FALSE(test_cleanable(Graph(6)).found());
        CHECK(test_cleanable(cycle(5)).length() == 5);  // its 4-paths delete nothing
    }
}

TEST_CASE("cleaning_list") {
    SECTION("edgeless graph: the empty set plus all singletons") {
        auto list = cleaning_list(Graph(4));
        REQUIRE(list.size() == 5);
        CHECK(list[0].vertices.none());
        CHECK(list[0].provenance == CleaningSet::Provenance::empty_set);
        for (int w = 0; w < 4; ++w) {
            CHECK(list[std::size_t(w + 1)].vertices.count() == 1);
            CHECK(list[std::size_t(w + 1)].vertices.test(w));
        }
    }
    SECTION("K3 includes the full closed neighborhood") {
        auto list = cleaning_list(testutil::complete(3));
        bool has_all = false;
        for (const auto& cs : list) has_all = has_all || cs.vertices.count() == 3;
        CHECK(has_all);
        // dedup: sets appear once
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) CHECK_FALSE(list[i].vertices == list[j].vertices);
    }
    SECTION("a consecutive-spread big major lands in a hole-disjoint set") {
        Graph g = cycle_plus_pattern(7, {{0, 1, 2, 3}});
        MajorClass mc = classify_major(g, hole_of(7), 7);
        REQUIRE((mc.is_major && mc.big));
        bool witness = false;
        for (const auto& cs : cleaning_list(g)) {
            if (!cs.vertices.test(7)) continue;
            bool disjoint = true;
            for (int v = 0; v < 7; ++v) disjoint = disjoint && !cs.vertices.test(v);
            witness = witness || disjoint;
        }
        CHECK(witness);
    }
}

TEST_CASE("no_heavy_clean") {
    SECTION("bare C7 via the empty cleaning set") { CHECK(no_heavy_clean(cycle(7)).length() == 7); }
    SECTION("bipartite failure") { CHECK_FALSE(no_heavy_clean(cycle(8)).found()); }
    SECTION("adjacent major pair against the oracle") {
        Graph g = cycle_plus_pattern(9, {{0, 1, 3, 5}, {4, 5, 7, 0}});
        g.add_edge(9, 10);
        Detection o = brute_shortest_odd_hole(g);
        REQUIRE(o.found());
        Detection d = no_heavy_clean(g);
        if (d.found()) CHECK(d.length() >= o.length());
        HoleRecorder merged;
        merged.merge(d);
        merged.merge(test_cleanable(g));
        REQUIRE(merged.best());
        CHECK(merged.best()->length() == o.length());
    }
}

TEST_CASE("no_great_pyramid_solver") {
    SECTION("odd cycles") {
        CHECK(no_great_pyramid_solver(cycle(7)).length() == 7);
        CHECK(no_great_pyramid_solver(cycle(11)).length() == 11);
    }
    SECTION("C11 with scattered non-major pendants") {
        Graph g(14);
        for (int i = 0; i < 11; ++i) g.add_edge(i, (i + 1) % 11);
        g.add_edge(11, 0);
        g.add_edge(12, 5);
        g.add_edge(13, 8);
        Detection o = brute_shortest_odd_hole(g, {.max_n = 14});
        REQUIRE(o.length() == 11);
        CHECK(no_great_pyramid_solver(g).length() == 11);
    }
    SECTION("forest") {
        Graph g(6);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(3, 4);
        CHECK_FALSE(no_great_pyramid_solver(g).found());
    }
}

TEST_CASE("cleaning soundness: every found hole re-validates in the parent graph") {
    SplitMix64 rng(2024);
    int found = 0;
    for (int it = 0; it < 120; ++it) {
        Graph g = random_graph(6 + rng.next_below(4), 0.2 + 0.1 * double(rng.next_below(4)), rng.next());
        Detection o = brute_shortest_odd_hole(g);
        for (const Detection& d : {test_clean(g), test_cleanable(g), no_heavy_clean(g)}) {
            if (!d.found()) continue;
            ++found;
            CHECK(is_hole(g, *d.hole));
            CHECK(d.hole->odd());
            REQUIRE(o.found());
            CHECK(d.length() >= o.length());
        }
    }
    CHECK(found > 30);
}
