#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

namespace ramsey {

namespace detail {

/// Vertices reachable from the seed set through `allowed` vertices.
/// Seeds need not be allowed themselves; the result is a subset of allowed.
inline uint32_t reach_from(const uint32_t* adj, uint32_t seeds, uint32_t allowed) {
    uint32_t reach = 0;
    uint32_t frontier = seeds;
    while (frontier != 0) {
        uint32_t nxt = 0;
        uint32_t f = frontier;
        while (f != 0) {
            int v = std::countr_zero(f);
            f &= f - 1;
            nxt |= adj[v];
        }
        nxt &= allowed & ~reach;
        reach |= nxt;
        frontier = nxt;
    }
    return reach;
}

// Depth-first search for a simple path on >= target vertices, growing from
// one endpoint, pruned by the size of the set still reachable from it.
struct PathFinder {
    const uint32_t* adj;
    int n;
    int target;
    uint32_t full;
    std::array<int, kMaxVertices> stack{};

    PathFinder(const Graph& g, int t)
        : adj(g.adj.data()), n(g.n), target(t), full(n == 32 ? ~uint32_t{0} : vbit(n) - 1) {}

    bool run(std::vector<int>* out) {
        if (target <= 1) {
            if (out) out->assign(1, 0);
            return true;
        }
        std::array<int, kMaxVertices> order{};
        std::iota(order.begin(), order.begin() + n, 0);
        std::stable_sort(order.begin(), order.begin() + n,
                         [&](int a, int b) { return std::popcount(adj[a]) < std::popcount(adj[b]); });
        for (int si = 0; si < n; ++si) {
            int s = order[static_cast<size_t>(si)];
            if (adj[s] == 0) continue;  // target >= 2 needs an edge
            stack[0] = s;
            if (dfs(s, vbit(s), 1, out)) return true;
        }
        return false;
    }

    bool dfs(int end, uint32_t mask, int len, std::vector<int>* out) {
        if (len >= target) {
            if (out) out->assign(stack.begin(), stack.begin() + len);
            return true;
        }
        uint32_t reach = reach_from(adj, vbit(end), full & ~mask);
        if (len + std::popcount(reach) < target) return false;
        uint32_t cand = adj[end] & ~mask;
        while (cand != 0) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            stack[static_cast<size_t>(len)] = u;
            if (dfs(u, mask | vbit(u), len + 1, out)) return true;
        }
        return false;
    }
};

// Search for a simple path on >= p vertices that uses a given edge (i,j).
// The left part (ending at i, avoiding the right side) is fixed first, then
// the right part grows from j; any path through the edge splits uniquely
// this way.
struct ThroughEdgePath {
    const uint32_t* adj;
    uint32_t full;
    int p;

    bool right(int end, uint32_t mask, int len) const {
        if (len >= p) return true;
        uint32_t reach = reach_from(adj, vbit(end), full & ~mask);
        if (len + std::popcount(reach) < p) return false;
        uint32_t cand = adj[end] & ~mask;
        while (cand != 0) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (right(u, mask | vbit(u), len + 1)) return true;
        }
        return false;
    }

    bool left(int end_l, int j, uint32_t mask, int len) const {
        if (right(j, mask, len)) return true;
        uint32_t reach = reach_from(adj, vbit(end_l) | vbit(j), full & ~mask);
        if (len + std::popcount(reach) < p) return false;
        uint32_t cand = adj[end_l] & ~mask;
        while (cand != 0) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (left(u, j, mask | vbit(u), len + 1)) return true;
        }
        return false;
    }
};

/// True iff `adj` contains a simple path on >= p vertices using edge (i,j).
/// The edge itself need not be present in the rows.
inline bool has_path_through_edge(const uint32_t* adj, int n, int i, int j, int p) {
    if (p <= 2) return true;  // the edge itself is a P2
    ThroughEdgePath t{adj, n == 32 ? ~uint32_t{0} : vbit(n) - 1, p};
    return t.left(i, j, vbit(i) | vbit(j), 2);
}

/// True iff the graph restricted to `alive` has a matching of `need` edges.
/// Branches on the lowest-indexed non-isolated vertex: match it or skip it.
inline bool exists_matching(const uint32_t* adj, uint32_t alive, int need,
                            std::vector<std::pair<int, int>>* out) {
    if (need <= 0) return true;
    int v = -1;
    while (alive != 0) {
        int w = std::countr_zero(alive);
        if ((adj[w] & alive & ~vbit(w)) != 0) {
            v = w;
            break;
        }
        alive &= alive - 1;  // drop isolated vertex
    }
    if (v < 0) return false;
    if (std::popcount(alive) < 2 * need) return false;
    uint32_t cand = adj[v] & alive & ~vbit(v);
    while (cand != 0) {
        int u = std::countr_zero(cand);
        cand &= cand - 1;
        if (exists_matching(adj, alive & ~vbit(v) & ~vbit(u), need - 1, out)) {
            if (out) out->emplace_back(std::min(v, u), std::max(v, u));
            return true;
        }
    }
    return exists_matching(adj, alive & ~vbit(v), need, out);  // v stays unmatched
}

}  // namespace detail

/// True iff g contains a simple path on at least p vertices.  Short-circuits
/// at the first such path.  p=1 holds on any nonempty vertex set; p=2 iff
/// g has an edge.
inline bool has_path_of_order(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("has_path_of_order: p must be >= 1");
    if (p == 1) return g.n >= 1;
    if (p > g.n) return false;
    if (p == 2) return g.edge_count() > 0;
    detail::PathFinder pf(g, p);
    return pf.run(nullptr);
}

/// A path on exactly p vertices as a vertex sequence, or nullopt.
inline std::optional<std::vector<int>> find_path_of_order(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("find_path_of_order: p must be >= 1");
    if (p > g.n) return std::nullopt;
    if (p == 1) return std::vector<int>{0};
    detail::PathFinder pf(g, p);
    std::vector<int> path;
    if (!pf.run(&path)) return std::nullopt;
    path.resize(static_cast<size_t>(p));
    return path;
}

/// Maximum number of vertices of any simple path in g (1 for edgeless
/// nonempty graphs).  Linear probing over has_path_of_order.
inline int longest_path_order(const Graph& g) {
    int p = 1;
    while (p < g.n && has_path_of_order(g, p + 1)) ++p;
    return p;
}

/// Exact maximum matching size; exponential branching, intended for hosts
/// at desk scale.
inline int max_matching_size(const Graph& g) {
    uint32_t alive = g.n == 32 ? ~uint32_t{0} : vbit(g.n) - 1;
    int s = 0;
    while (s < g.n / 2 && detail::exists_matching(g.adj.data(), alive, s + 1, nullptr)) ++s;
    return s;
}

/// q pairwise disjoint edges if present, else nullopt.
inline std::optional<std::vector<std::pair<int, int>>> find_matching(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("find_matching: q must be >= 1");
    uint32_t alive = g.n == 32 ? ~uint32_t{0} : vbit(g.n) - 1;
    std::vector<std::pair<int, int>> out;
    if (!detail::exists_matching(g.adj.data(), alive, q, &out)) return std::nullopt;
    std::reverse(out.begin(), out.end());
    return out;
}

inline bool pattern_present(const Graph& g, const Pattern& pat) {
    if (pat.kind == PatternKind::path) return has_path_of_order(g, pat.size);
    uint32_t alive = g.n == 32 ? ~uint32_t{0} : vbit(g.n) - 1;
    return detail::exists_matching(g.adj.data(), alive, pat.size, nullptr);
}

// Per-color verdict: whether the forbidden pattern appears in that class,
// with a found embedding when it does.
struct ColorVerdict {
    bool violated = false;
    std::vector<int> path;                         // vertex sequence, for path patterns
    std::vector<std::pair<int, int>> matching;     // edge list, for matching patterns
};

struct GoodnessReport {
    bool good = false;
    std::vector<ColorVerdict> per_color;
};

/// Checks every color class against its forbidden pattern.  GOOD iff no
/// class contains its pattern.
inline GoodnessReport coloring_is_good(const EdgeColoring& c, const TargetSpec& spec) {
    if (c.k != spec.colors())
        throw std::invalid_argument("coloring_is_good: coloring has " + std::to_string(c.k) +
                                    " colors, spec has " + std::to_string(spec.colors()));
    GoodnessReport rep;
    rep.good = true;
    rep.per_color.resize(static_cast<size_t>(c.k));
    for (int col = 0; col < c.k; ++col) {
        Graph cls = c.color_class(col);
        const Pattern& pat = spec.patterns[static_cast<size_t>(col)];
        ColorVerdict& v = rep.per_color[static_cast<size_t>(col)];
        if (pat.kind == PatternKind::path) {
            if (auto path = find_path_of_order(cls, pat.size)) {
                v.violated = true;
                v.path = *path;
            }
        } else {
            if (auto m = find_matching(cls, pat.size)) {
                v.violated = true;
                v.matching = *m;
            }
        }
        if (v.violated) rep.good = false;
    }
    return rep;
}

/// Reference oracle: longest path order by enumerating all n! vertex
/// orders and taking the longest consecutive-adjacent run.  n <= 8 only.
inline int longest_path_bruteforce(const Graph& g) {
    if (g.n > 8) throw resource_error("longest_path_bruteforce: supports at most 8 vertices");
    std::vector<int> perm(static_cast<size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = 1;
    do {
        int run = 1;
        for (int i = 0; i + 1 < g.n; ++i) {
            run = g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i + 1)]) ? run + 1 : 1;
            best = std::max(best, run);
        }
        if (best == g.n) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace ramsey
