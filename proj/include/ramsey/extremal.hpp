#pragma once

#include <cstdint>

#include "ramsey/graph.hpp"
#include "ramsey/oracles.hpp"

namespace ramsey {

// Decomposition nv = n*t + r with n = p-1 and 0 <= r < n, used by the
// path-free edge bound and its equality graphs.
struct ExtremalParams {
    int nv;  // host vertex count
    int p;   // forbidden path order

    int block() const { return p - 1; }
    int groups() const { return nv / block(); }
    int rem() const { return nv % block(); }
};

inline long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

/// Upper bound on |E(G)| for a graph on nv vertices with no path on p
/// vertices: t*C(n,2) + C(r,2) where nv = n*t + r, n = p-1, 0 <= r < n.
inline long long fs_bound(int nv, int p) {
    if (p < 2) throw std::invalid_argument("fs_bound: forbidden path order must be >= 2");
    if (nv < 1) throw std::invalid_argument("fs_bound: vertex count must be >= 1");
    ExtremalParams ep{nv, p};
    return ep.groups() * choose2(ep.block()) + choose2(ep.rem());
}

/// Closed forms for ex(n,P4), ex(n,P5), ex(n,P6), n >= 3.
inline int ex_formula(int nv, int p) {
    if (nv < 3) throw std::invalid_argument("ex_formula: requires nv >= 3");
    switch (p) {
        case 4:
            return nv % 3 == 0 ? nv : nv - 1;
        case 5:
            switch (nv % 4) {
                case 0: return 3 * nv / 2;
                case 2: return 3 * nv / 2 - 2;
                default: return (3 * nv - 3) / 2;  // nv odd
            }
        case 6:
            switch (nv % 5) {
                case 0: return 2 * nv;
                case 1:
                case 4: return 2 * nv - 2;
                default: return 2 * nv - 3;  // nv = 2,3 (mod 5)
            }
        default:
            throw std::invalid_argument("ex_formula: p must be one of {4,5,6}");
    }
}

struct ExBruteResult {
    int max_edges = 0;
    Graph witness;
    uint64_t nodes = 0;        // DFS nodes visited
    uint64_t graphs = 0;       // P_p-free graphs reached as leaves
};

namespace detail {

struct ExBruteSearch {
    int nv;
    int p;
    std::vector<std::pair<int, int>> edge_list;
    Graph cur;
    ExBruteResult res;

    void dfs(int e, int edges_in) {
        ++res.nodes;
        int m = static_cast<int>(edge_list.size());
        if (edges_in + (m - e) <= res.max_edges) return;  // cannot beat current best
        if (e == m) {
            ++res.graphs;
            if (edges_in > res.max_edges) {
                res.max_edges = edges_in;
                res.witness = cur;
            }
            return;
        }
        auto [i, j] = edge_list[static_cast<size_t>(e)];
        cur.add_edge(i, j);
        // supergraph pruning: once P_p appears, every superset contains it
        if (!has_path_through_edge(cur.adj.data(), nv, i, j, p)) dfs(e + 1, edges_in + 1);
        cur.remove_edge(i, j);
        dfs(e + 1, edges_in);
    }
};

}  // namespace detail

/// Maximum edge count over all P_p-free graphs on nv labeled vertices, with
/// one witness attaining it.  Enumerates edge masks in edge_index order with
/// include-first branching; nv <= 8.
inline ExBruteResult ex_bruteforce(int nv, int p) {
    if (nv > 8) throw resource_error("ex_bruteforce: supports at most 8 vertices");
    if (nv < 1) throw std::invalid_argument("ex_bruteforce: vertex count must be >= 1");
    if (p < 2) throw std::invalid_argument("ex_bruteforce: forbidden path order must be >= 2");
    detail::ExBruteSearch s;
    s.nv = nv;
    s.p = p;
    s.cur = Graph(nv);
    s.res.witness = Graph(nv);
    s.edge_list = complete_graph(nv).edges();
    s.dfs(0, 0);
    return s.res;
}

/// tK_n u K_r on nt+r labeled vertices, blocks laid out consecutively.
/// Attains fs_bound and contains no path on n+1 vertices.
inline Graph extremal_graph_cliques(int t, int n, int r) {
    if (t < 0 || n < 1 || r < 0 || r >= n)
        throw std::invalid_argument("extremal_graph_cliques: need t >= 0, n >= 1, 0 <= r < n");
    int nv = n * t + r;
    if (nv < 1 || nv > kMaxVertices)
        throw std::invalid_argument("extremal_graph_cliques: nt+r must be in [1,32]");
    Graph g(nv);
    auto add_clique = [&](int lo, int size) {
        for (int a = lo; a < lo + size; ++a)
            for (int b = a + 1; b < lo + size; ++b) g.add_edge(a, b);
    };
    for (int b = 0; b < t; ++b) add_clique(b * n, n);
    add_clique(t * n, r);
    return g;
}

/// lK_n u (K_{(n-1)/2} + complement-of-K_{(n+1)/2 + (t-l-1)n + r}), the odd-n
/// equality case; requires n odd, t > 0, r = (n+-1)/2, 0 <= l < t.  The join
/// component fills the tail block, clique part first.
inline Graph extremal_graph_odd_join(int t, int n, int r, int l) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("extremal_graph_odd_join: n must be odd");
    if (t <= 0) throw std::invalid_argument("extremal_graph_odd_join: t must be > 0");
    if (r < 0 || r >= n || (r != (n - 1) / 2 && r != (n + 1) / 2))
        throw std::invalid_argument("extremal_graph_odd_join: r must be (n-1)/2 or (n+1)/2 and < n");
    if (l < 0 || l >= t) throw std::invalid_argument("extremal_graph_odd_join: need 0 <= l < t");
    int nv = n * t + r;
    if (nv < 1 || nv > kMaxVertices)
        throw std::invalid_argument("extremal_graph_odd_join: nt+r must be in [1,32]");
    Graph g(nv);
    for (int b = 0; b < l; ++b)
        for (int a = b * n; a < (b + 1) * n; ++a)
            for (int c = a + 1; c < (b + 1) * n; ++c) g.add_edge(a, c);
    int lo = l * n;
    int a_sz = (n - 1) / 2;  // clique side of the join
    for (int a = lo; a < lo + a_sz; ++a) {
        for (int c = a + 1; c < lo + a_sz; ++c) g.add_edge(a, c);
        for (int c = lo + a_sz; c < nv; ++c) g.add_edge(a, c);
    }
    return g;
}

}  // namespace ramsey
