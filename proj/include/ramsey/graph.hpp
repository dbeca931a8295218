#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/common.hpp"

namespace ramsey {

// Hosts are capped at 32 vertices so one adjacency row fits a machine word.
inline constexpr int kMaxVertices = 32;
inline constexpr int kMaxEdges = kMaxVertices * (kMaxVertices - 1) / 2;  // 496

inline constexpr uint32_t vbit(int v) { return uint32_t{1} << v; }

/// Rank of the pair (i,j), 0 <= i < j < n, in lexicographic order
/// (0,1),(0,2),...,(0,n-1),(1,2),...  Bijective onto {0,...,C(n,2)-1}.
inline int edge_index(int i, int j, int n) {
    if (i < 0 || i >= j || j >= n)
        throw std::invalid_argument("edge_index: need 0 <= i < j < n, got i=" + std::to_string(i) +
                                    " j=" + std::to_string(j) + " n=" + std::to_string(n));
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of edge_index for the same n.
inline std::pair<int, int> edge_from_index(int idx, int n) {
    if (idx < 0 || idx >= n * (n - 1) / 2) throw std::invalid_argument("edge_from_index: index out of range");
    int i = 0;
    while (idx >= n - 1 - i) {
        idx -= n - 1 - i;
        ++i;
    }
    return {i, i + 1 + idx};
}

// Labeled simple undirected graph on at most 32 vertices, stored as
// per-vertex adjacency bitmask rows.  Not necessarily complete.
struct Graph {
    int n = 1;
    std::array<uint32_t, kMaxVertices> adj{};

    Graph() = default;

    explicit Graph(int vertices) : n(vertices) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count must be in [1,32], got " + std::to_string(n));
    }

    bool has_edge(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return (adj[i] & vbit(j)) != 0;
    }

    void add_edge(int i, int j) {
        if (i == j) throw std::invalid_argument("Graph::add_edge: self-loop");
        check_vertex(i);
        check_vertex(j);
        adj[i] |= vbit(j);
        adj[j] |= vbit(i);
    }

    void remove_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        adj[i] &= ~vbit(j);
        adj[j] &= ~vbit(i);
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj[v]);
    }

    /// Neighborhood of v as a bitmask.
    uint32_t neighbors(int v) const {
        check_vertex(v);
        return adj[v];
    }

    int min_degree() const {
        int d = n - 1;
        for (int v = 0; v < n; ++v) d = std::min(d, std::popcount(adj[v]));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, std::popcount(adj[v]));
        return d;
    }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += std::popcount(adj[v]);
        return s / 2;
    }

    bool is_complete() const { return edge_count() == n * (n - 1) / 2; }

    /// Edges as (i,j) pairs with i < j, in edge_index order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(edge_count()));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[i] & vbit(j)) out.emplace_back(i, j);
        return out;
    }

    bool operator==(const Graph& o) const {
        if (n != o.n) return false;
        for (int v = 0; v < n; ++v)
            if (adj[v] != o.adj[v]) return false;
        return true;
    }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw std::invalid_argument("Graph: vertex index " + std::to_string(v) + " out of range");
    }
};

/// K_n on vertices {0,...,n-1}.
inline Graph complete_graph(int n) {
    Graph g(n);
    uint32_t all = n == kMaxVertices ? ~uint32_t{0} : vbit(n) - 1;
    for (int v = 0; v < n && v < kMaxVertices; ++v) g.adj[static_cast<size_t>(v)] = all & ~vbit(v);
    return g;
}

/// Edgeless graph on n vertices.
inline Graph empty_graph(int n) { return Graph(n); }

}  // namespace ramsey
