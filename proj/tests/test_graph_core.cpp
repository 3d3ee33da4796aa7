#include <catch_amalgamated.hpp>

#include "oddhole/paths.hpp"
#include "test_util.hpp"

using namespace oddhole;
using testutil::cycle;
using testutil::complete;
using testutil::random_graph;
using testutil::vset;

TEST_CASE("graph rejects loops, parallel edges and bad ids") {
    Graph g(4);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
}

TEST_CASE("shortest_path_avoiding on C7") {
    Graph g = cycle(7);
    SECTION("no forbidden vertices: the short arc") {
        auto p = shortest_path_avoiding(g, 0, 3, VertexSet(7));
        REQUIRE(p);
        CHECK(p->vertices == std::vector<int>{0, 1, 2, 3});
        CHECK(p->length() == 3);
    }
    SECTION("forbidding the short arc leaves the long one") {
        auto p = shortest_path_avoiding(g, 0, 3, vset(g, {1, 2}));
        REQUIRE(p);
        CHECK(p->vertices == std::vector<int>{0, 6, 5, 4, 3});
        CHECK(p->length() == 4);
    }
    SECTION("endpoints may sit inside the forbidden set") {
        auto p = shortest_path_avoiding(g, 0, 3, vset(g, {0, 1, 2, 3}));
        REQUIRE(p);
        CHECK(p->vertices == std::vector<int>{0, 6, 5, 4, 3});
    }
    SECTION("equal endpoints are a contract violation") {
        CHECK_THROWS_AS(shortest_path_avoiding(g, 2, 2, VertexSet(7)), std::invalid_argument);
    }
}

TEST_CASE("shortest_path_avoiding: disconnected pair") {
    Graph g(2);
    CHECK_FALSE(shortest_path_avoiding(g, 0, 1, VertexSet(2)));
}

TEST_CASE("monotonicity in the forbidden set") {
    SplitMix64 rng(20240811);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_graph(12, 0.3, rng.next());
        int s = rng.next_below(12);
        int t = rng.next_below(12);
        if (s == t) continue;
        VertexSet small(12), large(12);
        for (int v = 0; v < 12; ++v) {
            if (rng.next_below(4) == 0) {
                small.set(v);
                large.set(v);
            } else if (rng.next_below(3) == 0) {
                large.set(v);
            }
        }
        auto ps = shortest_path_avoiding(g, s, t, small);
        auto pl = shortest_path_avoiding(g, s, t, large);
        if (pl) {
            REQUIRE(ps);
            CHECK(ps->length() <= pl->length());
        }
    }
}

TEST_CASE("empty forbidden set agrees with plain BFS on random graphs") {
    SplitMix64 rng(7);
    for (int it = 0; it < 100; ++it) {
        int n = 5 + rng.next_below(46);
        Graph g = random_graph(n, 0.15, rng.next());
        // independent textbook BFS
        int s = rng.next_below(n), t = rng.next_below(n);
        if (s == t) continue;
        std::vector<int> dist(std::size_t(n), -1);
        std::vector<int> q{s};
        dist[std::size_t(s)] = 0;
        for (std::size_t h = 0; h < q.size(); ++h)
            for (int w : g.neighbors(q[h]))
                if (dist[std::size_t(w)] < 0) {
                    dist[std::size_t(w)] = dist[std::size_t(q[h])] + 1;
                    q.push_back(w);
                }
        auto p = shortest_path_avoiding(g, s, t, VertexSet(n));
        if (dist[std::size_t(t)] < 0) {
            CHECK_FALSE(p);
        } else {
            REQUIRE(p);
            CHECK(p->length() == dist[std::size_t(t)]);
            CHECK(is_induced_path_of(g, p->vertices));  // a shortest path has no chord
        }
    }
}

TEST_CASE("is_hole") {
    Graph c5 = cycle(5);
    CHECK(is_hole(c5, {0, 1, 2, 3, 4}));
    CHECK(is_hole(c5, {2, 3, 4, 0, 1}));
    CHECK_FALSE(is_hole(c5, {0, 1, 3, 2, 4}));  // two entries swapped
    CHECK_FALSE(is_hole(complete(4), {0, 1, 2, 3}));
    CHECK_FALSE(is_hole(c5, {0, 1, 2}));
    CHECK_FALSE(is_hole(c5, {0, 1, 2, 3, 4, 4}));
    CHECK_FALSE(is_hole(c5, {0, 1, 2, 3, 9}));
}

TEST_CASE("is_hole is invariant under rotation and reflection") {
    Graph g = cycle(9);
    std::vector<int> seq{0, 1, 2, 3, 4, 5, 6, 7, 8};
    for (int r = 0; r < 9; ++r) {
        std::vector<int> rot;
        for (int i = 0; i < 9; ++i) rot.push_back(seq[std::size_t((i + r) % 9)]);
        CHECK(is_hole(g, rot));
        std::reverse(rot.begin(), rot.end());
        CHECK(is_hole(g, rot));
    }
}

TEST_CASE("hole_distance") {
    Hole c7{{0, 1, 2, 3, 4, 5, 6}};
    CHECK(hole_distance(c7, 0, 1) == 1);
    CHECK(hole_distance(c7, 0, 3) == 3);
    CHECK(hole_distance(c7, 0, 4) == 3);  // shorter arc wraps
    CHECK(hole_distance(c7, 2, 2) == 0);
    CHECK_THROWS_AS(hole_distance(c7, 0, 9), std::invalid_argument);
    // shorter arc + longer arc = cycle length
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) {
            int d = hole_distance(c7, u, v);
            int longer = 7 - d;
            CHECK(d <= longer);
            CHECK(d + longer == 7);
        }
}

TEST_CASE("canonical_cycle picks the min-vertex, min-neighbor rotation") {
    CHECK(canonical_cycle({3, 7, 1, 4, 9}) == std::vector<int>{1, 4, 9, 3, 7});
    CHECK(canonical_cycle({1, 4, 9, 3, 7}) == std::vector<int>{1, 4, 9, 3, 7});
    CHECK(canonical_cycle({7, 3, 9, 4, 1}) == std::vector<int>{1, 4, 9, 3, 7});
    CHECK(canonical_cycle({0, 1, 2, 3, 4}) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(canonical_cycle({0, 4, 3, 2, 1}) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("induced subgraph keeps adjacency and mapping") {
    Graph g = cycle(7);
    auto sub = induced_subgraph_without(g, vset(g, {3}));
    CHECK(sub.graph.vertex_count() == 6);
    CHECK(sub.graph.edge_count() == 5);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            CHECK(sub.graph.adjacent(u, v) == g.adjacent(sub.to_parent[std::size_t(u)], sub.to_parent[std::size_t(v)]));
}
