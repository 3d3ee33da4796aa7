#pragma once

#include "oddhole/oracle.hpp"

namespace testutil {

inline oddhole::Graph cycle(int k) { return oddhole::generate(oddhole::CycleSpec{k}).graph; }

inline oddhole::Graph complete(int k) {
    oddhole::Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

inline oddhole::Graph random_graph(int n, double p, std::uint64_t seed) {
    return oddhole::generate(oddhole::RandomSpec{n, p, seed}).graph;
}

// outer 5-cycle 0..4, inner 5-star 5..9, spokes i -- i+5
inline oddhole::Graph petersen() {
    oddhole::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

inline oddhole::VertexSet vset(const oddhole::Graph& g, std::initializer_list<int> vs) {
    oddhole::VertexSet s(g.vertex_count());
    for (int v : vs) s.set(v);
    return s;
}

}  // namespace testutil
