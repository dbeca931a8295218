#pragma once

#include <cstdlib>
#include <random>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey_test {

// Fixed default; override with RAMSEY_TEST_SEED to vary the property tests.
inline unsigned test_seed() {
    if (const char* s = std::getenv("RAMSEY_TEST_SEED")) return static_cast<unsigned>(std::strtoul(s, nullptr, 10));
    return 20240517u;
}

inline const unsigned kSeed = test_seed();

inline ramsey::Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    ramsey::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

/// Graph from an edge-mask in edge_index order (exhaustive small-graph loops).
inline ramsey::Graph graph_from_mask(int n, uint32_t mask) {
    ramsey::Graph g(n);
    int m = n * (n - 1) / 2;
    for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1) {
            auto [i, j] = ramsey::edge_from_index(e, n);
            g.add_edge(i, j);
        }
    return g;
}

inline ramsey::EdgeColoring random_coloring(std::mt19937& rng, const ramsey::Graph& host, int k) {
    ramsey::EdgeColoring c(host, k, 0);
    std::uniform_int_distribution<int> pick(0, k - 1);
    for (auto [i, j] : host.edges()) c.set_color(i, j, pick(rng));
    return c;
}

inline ramsey::Graph path_graph(int p) {
    ramsey::Graph g(p);
    for (int v = 0; v + 1 < p; ++v) g.add_edge(v, v + 1);
    return g;
}

inline ramsey::Graph cycle_graph(int p) {
    ramsey::Graph g = path_graph(p);
    if (p >= 3) g.add_edge(0, p - 1);
    return g;
}

}  // namespace ramsey_test
