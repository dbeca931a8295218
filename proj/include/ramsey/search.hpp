#pragma once

#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/oracles.hpp"

namespace ramsey {

enum class SymmetryLevel { none, first_edge, vertex_orbits };

struct SearchConfig {
    double time_limit_seconds = 300.0;  // 0 = unlimited
    SymmetryLevel symmetry = SymmetryLevel::vertex_orbits;
    int worker_partition = 1;  // top-level branch fan-out
    bool deterministic = true;
};

enum class Verdict { found, exhausted, timeout };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::found: return "FOUND";
        case Verdict::exhausted: return "EXHAUSTED";
        default: return "TIMEOUT";
    }
}

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t oracle_prunes = 0;
    uint64_t symmetry_prunes = 0;
    double seconds = 0.0;

    SearchStats& operator+=(const SearchStats& o) {
        nodes += o.nodes;
        oracle_prunes += o.oracle_prunes;
        symmetry_prunes += o.symmetry_prunes;
        seconds += o.seconds;
        return *this;
    }
};

struct SearchOutcome {
    Verdict verdict = Verdict::exhausted;
    std::optional<EdgeColoring> witness;
    SearchStats stats;
};

namespace detail {

// State shared between workers: a single-assignment result cell (ordered by
// frontier index so the reported witness is the one sequential search would
// find) and cooperative cancellation flags.
struct EngineShared {
    std::atomic<long long> found_min{LLONG_MAX};
    std::atomic<bool> stop{false};
    std::atomic<bool> timed_out{false};
};

// Backtracking searcher over k-colorings of K_n, edges in edge_index order,
// colors branched in increasing index.  All state is private to one worker.
//
// Invariant at every node: each color class contains its forbidden pattern
// nowhere, so after coloring edge e with color c only patterns through e in
// class c need checking.
class Searcher {
  public:
    int n = 0;
    int m = 0;
    int k = 0;
    std::array<Pattern, kMaxColors> pat{};
    SymmetryLevel sym = SymmetryLevel::vertex_orbits;
    bool deterministic = true;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    std::array<int8_t, kMaxEdges> col{};
    std::array<std::array<uint32_t, kMaxVertices>, kMaxColors> cadj{};
    std::array<int, kMaxColors> cnt{};
    std::array<uint32_t, kMaxColors> touched{};  // vertices met by a degree-capped class
    std::array<int16_t, kMaxEdges> ei{};
    std::array<int16_t, kMaxEdges> ej{};
    std::array<int, kMaxVertices> row_base{};
    std::array<long long, kMaxColors> cap{};
    std::array<int, kMaxColors> class_rep{};
    long long cap_fixed_sum = 0;  // caps of colors without the degree<=1 shortcut
    int fixed_cnt_sum = 0;

    SearchStats stats;
    bool timed_flag = false;
    uint64_t tick = 0;

    EngineShared* shared = nullptr;
    long long frontier_index = -1;

    bool found = false;
    std::array<int8_t, kMaxEdges> best{};

    void init(int vertices, const TargetSpec& spec, const SearchConfig& cfg) {
        n = vertices;
        m = n * (n - 1) / 2;
        k = spec.colors();
        sym = cfg.symmetry;
        deterministic = cfg.deterministic;
        for (int c = 0; c < k; ++c) pat[static_cast<size_t>(c)] = spec.patterns[static_cast<size_t>(c)];
        col.fill(-1);
        for (int e = 0; e < m; ++e) {
            auto [a, b] = edge_from_index(e, n);
            ei[static_cast<size_t>(e)] = static_cast<int16_t>(a);
            ej[static_cast<size_t>(e)] = static_cast<int16_t>(b);
        }
        for (int a = 0; a < n; ++a) row_base[static_cast<size_t>(a)] = a * n - a * (a + 1) / 2 - a - 1;
        cap_fixed_sum = 0;
        for (int c = 0; c < k; ++c) {
            const Pattern& p = pat[static_cast<size_t>(c)];
            if (p.kind == PatternKind::path) {
                cap[static_cast<size_t>(c)] = p.size < 2 ? 0 : fs_bound(n, p.size);
            } else {
                // Erdos-Gallai: max edges with no matching of p.size edges
                int s = p.size - 1;
                if (n < 2 * p.size)
                    cap[static_cast<size_t>(c)] = choose2(n);
                else
                    cap[static_cast<size_t>(c)] =
                        std::max(choose2(2 * s + 1), choose2(s) + static_cast<long long>(s) * (n - s));
            }
            if (!degree_capped(c)) cap_fixed_sum += cap[static_cast<size_t>(c)];
        }
        for (int c = 0; c < k; ++c) {
            int rep = c;
            for (int c2 = 0; c2 < c; ++c2)
                if (pat[static_cast<size_t>(c2)] == pat[static_cast<size_t>(c)]) {
                    rep = c2;
                    break;
                }
            class_rep[static_cast<size_t>(c)] = rep;
        }
    }

    bool degree_capped(int c) const {
        const Pattern& p = pat[static_cast<size_t>(c)];
        return p.kind == PatternKind::path && p.size == 3;
    }

    int colv(int a, int b) const {  // requires a < b
        return col[static_cast<size_t>(row_base[static_cast<size_t>(a)] + b)];
    }

    bool out_of_time() {
        if (timed_flag) return true;
        if ((++tick & 0xFFF) == 0) {
            if (has_deadline && std::chrono::steady_clock::now() >= deadline) {
                timed_flag = true;
                if (shared) {
                    shared->timed_out.store(true, std::memory_order_relaxed);
                    shared->stop.store(true, std::memory_order_relaxed);
                }
                return true;
            }
            if (shared) {
                if (shared->stop.load(std::memory_order_relaxed)) return true;
                if (deterministic &&
                    shared->found_min.load(std::memory_order_relaxed) < frontier_index)
                    return true;  // a lexicographically earlier subtree already found a witness
            }
        }
        return false;
    }

    bool cancelled() const {
        if (!shared) return false;
        if (shared->stop.load(std::memory_order_relaxed) && !deterministic) return true;
        if (deterministic && shared->found_min.load(std::memory_order_relaxed) < frontier_index) return true;
        return false;
    }

    // Adjacent-transposition lex-minimality plus canonical color order.
    // Sound: the lexicographically least coloring of every orbit under
    // (vertex relabeling x pattern-preserving color permutation) survives.
    bool symmetry_reject(int e, int i, int j, int c) {
        if (sym == SymmetryLevel::none) return false;
        if (e == 0) return class_rep[static_cast<size_t>(c)] != c;
        if (sym == SymmetryLevel::first_edge) return false;
        // among equal-pattern colors, first uses must come in increasing order
        for (int c2 = class_rep[static_cast<size_t>(c)]; c2 < c; ++c2)
            if (pat[static_cast<size_t>(c2)] == pat[static_cast<size_t>(c)] && cnt[static_cast<size_t>(c2)] == 0)
                return true;
        // swap of vertices j-1, j: decided at column entry (i, j)
        if (i < j - 1) {
            bool eq = true;
            for (int r = 0; r < i; ++r)
                if (colv(r, j - 1) != colv(r, j)) {
                    eq = false;
                    break;
                }
            if (eq && c < colv(i, j - 1)) return true;
        }
        // swap of vertices i-1, i: decided at row entry (i, j)
        if (i >= 1) {
            bool eq = true;
            for (int r = 0; r < i - 1 && eq; ++r)
                if (colv(r, i - 1) != colv(r, i)) eq = false;
            for (int q = i + 1; q < j && eq; ++q)
                if (colv(i - 1, q) != colv(i, q)) eq = false;
            if (eq && c < colv(i - 1, j)) return true;
        }
        return false;
    }

    // Would coloring (i,j) with c complete the forbidden pattern of class c?
    // Classes are clean before the assignment, so only patterns through the
    // new edge can appear.
    bool violates(int i, int j, int c) const {
        const Pattern& p = pat[static_cast<size_t>(c)];
        const uint32_t* adj = cadj[static_cast<size_t>(c)].data();
        if (p.kind == PatternKind::path) {
            if (p.size <= 2) return true;
            if (p.size == 3) return (adj[i] | adj[j]) != 0;
            return has_path_through_edge(adj, n, i, j, p.size);
        }
        // a matching of p.size must use the new edge; strip its endpoints
        uint32_t alive = (n == 32 ? ~uint32_t{0} : vbit(n) - 1) & ~vbit(i) & ~vbit(j);
        return exists_matching(adj, alive, p.size - 1, nullptr);
    }

    void assign(int e, int i, int j, int c) {
        col[static_cast<size_t>(e)] = static_cast<int8_t>(c);
        cadj[static_cast<size_t>(c)][static_cast<size_t>(i)] |= vbit(j);
        cadj[static_cast<size_t>(c)][static_cast<size_t>(j)] |= vbit(i);
        ++cnt[static_cast<size_t>(c)];
        if (degree_capped(c))
            touched[static_cast<size_t>(c)] |= vbit(i) | vbit(j);
        else
            ++fixed_cnt_sum;
    }

    void unassign(int e, int i, int j, int c) {
        col[static_cast<size_t>(e)] = -1;
        cadj[static_cast<size_t>(c)][static_cast<size_t>(i)] &= ~vbit(j);
        cadj[static_cast<size_t>(c)][static_cast<size_t>(j)] &= ~vbit(i);
        --cnt[static_cast<size_t>(c)];
        if (degree_capped(c))
            touched[static_cast<size_t>(c)] &= ~(vbit(i) | vbit(j));  // a matching class meets each vertex once
        else
            --fixed_cnt_sum;
    }

    // Count-feasibility lookahead after assigning edge e: the remaining
    // edges must fit in the remaining class capacities.
    bool capacity_reject(int e) const {
        long long remaining = m - 1 - e;
        long long avail = cap_fixed_sum - fixed_cnt_sum;
        if (avail >= remaining) return false;
        // future edges in a degree-capped class pair up untouched vertices
        // among those that still have unassigned pairs
        uint32_t future_verts =
            e + 1 < m ? ((n == 32 ? ~uint32_t{0} : vbit(n) - 1) & ~(vbit(ei[static_cast<size_t>(e + 1)]) - 1))
                      : 0;
        for (int c = 0; c < k; ++c)
            if (degree_capped(c)) {
                avail += std::popcount(future_verts & ~touched[static_cast<size_t>(c)]) / 2;
                if (avail >= remaining) return false;
            }
        return avail < remaining;
    }

    // DFS over edges e..m-1; returns false when unwinding on stop/timeout.
    bool dfs(int e) {
        if (e == m) {
            found = true;
            best = col;
            return false;  // first witness in branch order; stop
        }
        if (out_of_time()) return false;
        int i = ei[static_cast<size_t>(e)];
        int j = ej[static_cast<size_t>(e)];
        for (int c = 0; c < k; ++c) {
            if (symmetry_reject(e, i, j, c)) {
                ++stats.symmetry_prunes;
                continue;
            }
            if (violates(i, j, c)) {
                ++stats.oracle_prunes;
                continue;
            }
            assign(e, i, j, c);
            ++stats.nodes;
            if (capacity_reject(e)) {
                ++stats.oracle_prunes;
            } else if (!dfs(e + 1)) {
                unassign(e, i, j, c);
                return false;
            }
            unassign(e, i, j, c);
        }
        return true;  // subtree fully explored
    }
};

}  // namespace detail

/// Decides whether a GOOD coloring of K_N exists for the spec: FOUND with a
/// verified witness, EXHAUSTED when the (symmetry-reduced) space has no
/// good coloring, or TIMEOUT.
inline SearchOutcome find_good_coloring(int N, const TargetSpec& spec, const SearchConfig& cfg) {
    if (N < 1 || N > kMaxVertices) throw std::invalid_argument("find_good_coloring: N must be in [1,32]");
    if (spec.colors() < 1 || spec.colors() > kMaxColors)
        throw std::invalid_argument("find_good_coloring: spec must have 1..4 colors");
    for (const Pattern& p : spec.patterns)
        if (p.size < 1) throw std::invalid_argument("find_good_coloring: pattern size must be >= 1");
    if (cfg.worker_partition < 1) throw std::invalid_argument("find_good_coloring: worker_partition must be >= 1");

    auto t0 = std::chrono::steady_clock::now();
    auto finish = [&](SearchOutcome out) {
        out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    };
    auto make_witness = [&](const std::array<int8_t, kMaxEdges>& colors) {
        EdgeColoring w(complete_graph(N), spec.colors());
        int m = N * (N - 1) / 2;
        for (int e = 0; e < m; ++e) {
            auto [i, j] = edge_from_index(e, N);
            w.set_color(i, j, colors[static_cast<size_t>(e)]);
        }
        if (!coloring_is_good(w, spec).good)
            throw std::logic_error("find_good_coloring: search produced a coloring the slow oracle rejects");
        return w;
    };

    // P1 is contained in every spanning class; no coloring can be good.
    for (const Pattern& p : spec.patterns)
        if (p.kind == PatternKind::path && p.size == 1) return finish({Verdict::exhausted, std::nullopt, {}});

    if (N == 1) {
        // no edges: the empty coloring is good (matchings and paths on >= 2
        // vertices cannot appear)
        EdgeColoring w(complete_graph(1), spec.colors());
        return finish({Verdict::found, w, {}});
    }

    const int m = N * (N - 1) / 2;
    const bool limited = cfg.time_limit_seconds > 0;
    const auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(cfg.time_limit_seconds));

    if (cfg.worker_partition == 1) {
        detail::Searcher s;
        s.init(N, spec, cfg);
        s.has_deadline = limited;
        s.deadline = deadline;
        bool complete = s.dfs(0);
        SearchOutcome out;
        out.stats = s.stats;
        if (s.found)
            out = {Verdict::found, make_witness(s.best), s.stats};
        else if (!complete && s.timed_flag)
            out = {Verdict::timeout, std::nullopt, s.stats};
        else
            out = {Verdict::exhausted, std::nullopt, s.stats};
        return finish(out);
    }

    // Parallel mode: expand the top of the branching tree into a frontier of
    // prefix assignments, then let workers complete them in order.
    struct Prefix {
        std::vector<int8_t> colors;
    };
    std::vector<Prefix> frontier{{}};
    detail::Searcher gen;
    gen.init(N, spec, cfg);
    gen.has_deadline = limited;
    gen.deadline = deadline;
    SearchStats total = gen.stats;
    int depth = 0;
    const size_t want = static_cast<size_t>(cfg.worker_partition) * 8;
    std::optional<SearchOutcome> early;
    while (depth < m && frontier.size() < want && !early) {
        std::vector<Prefix> next;
        next.reserve(frontier.size() * static_cast<size_t>(spec.colors()));
        for (const Prefix& pre : frontier) {
            if (gen.out_of_time()) break;
            // replay prefix
            for (int e = 0; e < depth; ++e)
                gen.assign(e, gen.ei[static_cast<size_t>(e)], gen.ej[static_cast<size_t>(e)],
                           pre.colors[static_cast<size_t>(e)]);
            int i = gen.ei[static_cast<size_t>(depth)];
            int j = gen.ej[static_cast<size_t>(depth)];
            for (int c = 0; c < spec.colors() && !early; ++c) {
                if (gen.symmetry_reject(depth, i, j, c)) {
                    ++gen.stats.symmetry_prunes;
                    continue;
                }
                if (gen.violates(i, j, c)) {
                    ++gen.stats.oracle_prunes;
                    continue;
                }
                gen.assign(depth, i, j, c);
                ++gen.stats.nodes;
                if (gen.capacity_reject(depth)) {
                    ++gen.stats.oracle_prunes;
                } else {
                    Prefix p = pre;
                    p.colors.push_back(static_cast<int8_t>(c));
                    if (depth + 1 == m) {
                        // complete good coloring met while splitting
                        std::array<int8_t, kMaxEdges> full{};
                        for (int e = 0; e < m; ++e) full[static_cast<size_t>(e)] = p.colors[static_cast<size_t>(e)];
                        early = SearchOutcome{Verdict::found, make_witness(full), {}};
                    } else {
                        next.push_back(std::move(p));
                    }
                }
                gen.unassign(depth, i, j, c);
            }
            for (int e = depth - 1; e >= 0; --e)
                gen.unassign(e, gen.ei[static_cast<size_t>(e)], gen.ej[static_cast<size_t>(e)],
                             pre.colors[static_cast<size_t>(e)]);
            if (early) break;
        }
        total = gen.stats;
        if (early) break;
        if (gen.timed_flag) {
            SearchOutcome out{Verdict::timeout, std::nullopt, total};
            return finish(out);
        }
        frontier = std::move(next);
        ++depth;
    }
    if (early) {
        early->stats = total;
        return finish(*early);
    }
    if (frontier.empty()) return finish({Verdict::exhausted, std::nullopt, total});

    detail::EngineShared shared;
    std::atomic<size_t> next_idx{0};
    std::vector<std::optional<std::array<int8_t, kMaxEdges>>> found_at(frontier.size());
    std::vector<SearchStats> worker_stats(static_cast<size_t>(cfg.worker_partition));
    std::mutex found_mutex;

    auto worker = [&](int wid) {
        detail::Searcher s;
        s.init(N, spec, cfg);
        s.has_deadline = limited;
        s.deadline = deadline;
        s.shared = &shared;
        while (true) {
            size_t idx = next_idx.fetch_add(1, std::memory_order_relaxed);
            if (idx >= frontier.size()) break;
            s.frontier_index = static_cast<long long>(idx);
            if (s.cancelled()) {
                if (!cfg.deterministic) break;
                continue;
            }
            const auto& pre = frontier[idx].colors;
            for (int e = 0; e < depth; ++e)
                s.assign(e, s.ei[static_cast<size_t>(e)], s.ej[static_cast<size_t>(e)], pre[static_cast<size_t>(e)]);
            s.found = false;
            s.dfs(depth);
            for (int e = depth - 1; e >= 0; --e)
                s.unassign(e, s.ei[static_cast<size_t>(e)], s.ej[static_cast<size_t>(e)], pre[static_cast<size_t>(e)]);
            if (s.found) {
                {
                    std::lock_guard<std::mutex> lk(found_mutex);
                    found_at[idx] = s.best;
                }
                long long cur = shared.found_min.load(std::memory_order_relaxed);
                while (static_cast<long long>(idx) < cur &&
                       !shared.found_min.compare_exchange_weak(cur, static_cast<long long>(idx))) {
                }
                if (!cfg.deterministic) {
                    shared.stop.store(true, std::memory_order_relaxed);
                    break;
                }
            }
            if (s.timed_flag) break;
        }
        worker_stats[static_cast<size_t>(wid)] = s.stats;
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(cfg.worker_partition));
    for (int w = 0; w < cfg.worker_partition; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
    for (const auto& ws : worker_stats) total += ws;

    long long fmin = shared.found_min.load();
    SearchOutcome out;
    if (fmin != LLONG_MAX) {
        out = {Verdict::found, make_witness(*found_at[static_cast<size_t>(fmin)]), total};
    } else if (shared.timed_out.load()) {
        out = {Verdict::timeout, std::nullopt, total};
    } else {
        out = {Verdict::exhausted, std::nullopt, total};
    }
    return finish(out);
}

}  // namespace ramsey
