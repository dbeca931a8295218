#pragma once

#include <array>

#include "ramsey/coloring.hpp"

namespace ramsey {

/// Classical 2-coloring of K_{m + floor(n/2) - 2} with no P_n in color 0
/// and no P_m in color 1 (2 <= n <= m).  Color 1 is a clique on block
/// A = {0..m-2}; color 0 covers every edge meeting block B = {m-1..N-1}
/// of size floor(n/2)-1, so its longest path has at most 2|B|+1 <= n-1
/// vertices.
inline EdgeColoring two_color_lower(int n, int m) {
    if (n < 2 || m < n) throw std::invalid_argument("two_color_lower: need 2 <= n <= m");
    int N = m + n / 2 - 2;
    if (N > kMaxVertices) throw resource_error("two_color_lower: host exceeds 32 vertices");
    int a = m - 1;  // block A = {0..a-1}, block B = {a..N-1}
    EdgeColoring c(complete_graph(N), 2, 0);
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) c.set_color(i, j, 1);
    return c;
}

/// The same coloring lifted to k=3 with an empty green class: GOOD for
/// (P3, P_n, P_m) on m + floor(n/2) - 2 vertices.
inline EdgeColoring three_color_lower(int n, int m) {
    EdgeColoring two = two_color_lower(n, m);
    EdgeColoring c(two.host, 3, 1);
    for (auto [i, j] : two.host.edges()) c.set_color(i, j, two.color_of(i, j) + 1);
    return c;
}

/// Four-block sharpness example: host on 4m vertices is K_{4m} minus all
/// A1-A2 and A3-A4 pairs, blocks A_i = {(i-1)m..im-1}.  Cross edges A1-A3
/// and A2-A4 are red (0), A1-A4 and A2-A3 blue (1); intra-block edges take
/// block_colors[i] (all red by default, making the red class 2K_{2m} and
/// the blue class 2K_{m,m}).  Longest monochromatic path: 2m vertices;
/// minimum degree 3m-1.
inline EdgeColoring schelp_blocks(int m, std::array<int, 4> block_colors = {0, 0, 0, 0}) {
    if (m < 1) throw std::invalid_argument("schelp_blocks: block size must be >= 1");
    if (4 * m > kMaxVertices) throw resource_error("schelp_blocks: host exceeds 32 vertices");
    for (int col : block_colors)
        if (col < 0 || col > 1) throw std::invalid_argument("schelp_blocks: block colors must be 0 or 1");
    int n = 4 * m;
    auto block_of = [m](int v) { return v / m; };
    Graph host(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int bi = block_of(i), bj = block_of(j);
            bool missing = (bi == 0 && bj == 1) || (bi == 2 && bj == 3);
            if (!missing) host.add_edge(i, j);
        }
    EdgeColoring c(host, 2, 0);
    for (auto [i, j] : host.edges()) {
        int bi = block_of(i), bj = block_of(j);
        int col;
        if (bi == bj)
            col = block_colors[static_cast<size_t>(bi)];
        else if ((bi == 0 && bj == 2) || (bi == 1 && bj == 3))
            col = 0;  // red
        else
            col = 1;  // blue: A1-A4 and A2-A3
        c.set_color(i, j, col);
    }
    return c;
}

/// Matching-corollary coloring of K_{2m+n-2} (3 <= n <= m): green empty,
/// red the join K_{n-1} + complement-of-K_{2m-1} (matching number n-1),
/// blue the clique on the independent part (matching number m-1).  GOOD
/// for (P3, nK2, mK2).
inline EdgeColoring matching_lower(int n, int m) {
    if (n < 3 || m < n) throw std::invalid_argument("matching_lower: need 3 <= n <= m");
    int N = 2 * m + n - 2;
    if (N > kMaxVertices) throw resource_error("matching_lower: host exceeds 32 vertices");
    int a = n - 1;  // join clique part = {0..a-1}
    EdgeColoring c(complete_graph(N), 3, 2);
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < N; ++j) c.set_color(i, j, 1);
    return c;
}

}  // namespace ramsey
