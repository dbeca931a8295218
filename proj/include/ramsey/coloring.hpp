#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

inline constexpr int kMaxColors = 4;

// Total assignment of one of k colors to every edge of a host graph.
// Stored twice, kept in sync: an index-addressed color array (edge_index
// order, -1 for non-host pairs) and per-color adjacency rows.  Color
// convention, fixed globally: for k=3, 0=green, 1=red, 2=blue; for k=2,
// 0=red, 1=blue.
struct EdgeColoring {
    Graph host;
    int k = 1;
    std::array<int8_t, kMaxEdges> color{};
    std::array<std::array<uint32_t, kMaxVertices>, kMaxColors> class_adj{};

    EdgeColoring() { color.fill(-1); }

    /// Coloring of `g` with every edge in color `fill` (default 0).
    explicit EdgeColoring(Graph g, int colors, int fill = 0) : host(g), k(colors) {
        if (k < 1 || k > kMaxColors) throw std::invalid_argument("EdgeColoring: k must be in [1,4]");
        if (fill < 0 || fill >= k) throw std::invalid_argument("EdgeColoring: fill color out of range");
        color.fill(-1);
        for (auto [i, j] : host.edges()) {
            color[static_cast<size_t>(edge_index(i, j, host.n))] = static_cast<int8_t>(fill);
            class_adj[static_cast<size_t>(fill)][static_cast<size_t>(i)] |= vbit(j);
            class_adj[static_cast<size_t>(fill)][static_cast<size_t>(j)] |= vbit(i);
        }
    }

    int color_of(int i, int j) const {
        if (i > j) std::swap(i, j);
        int c = color[static_cast<size_t>(edge_index(i, j, host.n))];
        if (c < 0) throw std::invalid_argument("EdgeColoring::color_of: not a host edge");
        return c;
    }

    void set_color(int i, int j, int c) {
        if (c < 0 || c >= k) throw std::invalid_argument("EdgeColoring::set_color: color out of range");
        if (i > j) std::swap(i, j);
        if (!host.has_edge(i, j)) throw std::invalid_argument("EdgeColoring::set_color: not a host edge");
        auto idx = static_cast<size_t>(edge_index(i, j, host.n));
        int old = color[idx];
        if (old >= 0) {
            class_adj[static_cast<size_t>(old)][static_cast<size_t>(i)] &= ~vbit(j);
            class_adj[static_cast<size_t>(old)][static_cast<size_t>(j)] &= ~vbit(i);
        }
        color[idx] = static_cast<int8_t>(c);
        class_adj[static_cast<size_t>(c)][static_cast<size_t>(i)] |= vbit(j);
        class_adj[static_cast<size_t>(c)][static_cast<size_t>(j)] |= vbit(i);
    }

    /// Spanning subgraph on all host vertices whose edges have the given color.
    Graph color_class(int c) const {
        if (c < 0 || c >= k) throw std::invalid_argument("EdgeColoring::color_class: color out of range");
        Graph g(host.n);
        for (int v = 0; v < host.n; ++v) g.adj[static_cast<size_t>(v)] = class_adj[static_cast<size_t>(c)][static_cast<size_t>(v)];
        return g;
    }

    int class_edge_count(int c) const { return color_class(c).edge_count(); }

    bool operator==(const EdgeColoring& o) const {
        if (!(host == o.host) || k != o.k) return false;
        int m = host.n * (host.n - 1) / 2;
        for (int e = 0; e < m; ++e)
            if (color[static_cast<size_t>(e)] != o.color[static_cast<size_t>(e)]) return false;
        return true;
    }
};

/// Relabel vertices: edge {i,j} of the result carries the color of
/// {perm^-1(i), perm^-1(j)}.  The permutation must map host edges onto
/// host edges.
inline EdgeColoring apply_vertex_permutation(const EdgeColoring& c, std::span<const int> perm) {
    int n = c.host.n;
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("apply_vertex_permutation: permutation size mismatch");
    std::array<bool, kMaxVertices> seen{};
    for (int v = 0; v < n; ++v) {
        int p = perm[static_cast<size_t>(v)];
        if (p < 0 || p >= n || seen[static_cast<size_t>(p)])
            throw std::invalid_argument("apply_vertex_permutation: not a bijection on {0..n-1}");
        seen[static_cast<size_t>(p)] = true;
    }
    EdgeColoring out;
    out.host = c.host;
    out.k = c.k;
    for (auto [i, j] : c.host.edges()) {
        int pi = perm[static_cast<size_t>(i)];
        int pj = perm[static_cast<size_t>(j)];
        if (!c.host.has_edge(pi, pj))
            throw std::invalid_argument("apply_vertex_permutation: permutation maps a host edge onto a non-edge");
        out.set_color(pi, pj, c.color_of(i, j));
    }
    return out;
}

}  // namespace ramsey
