#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ramsey/constructions.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

/// The paper-resolved closed forms, or nullopt outside them:
///   2 colors, (P_n,P_m), m >= n >= 2:            m + floor(n/2) - 1
///   3 colors, (P3,P_n,P_m), m >= n >= 3:         m + floor(n/2) - 1,
///     except (n,m) in {(3,3),(3,4)}:             5
///   3 colors, (P3,nK2,mK2), m >= n >= 3:         2m + n - 1
/// With `conjectured`, (P_n,P_n,P_n) for n >= 4 additionally yields
/// 2n-1 (n odd) / 2n-2 (n even).
inline std::optional<int> predicted_value(const TargetSpec& spec, bool conjectured = false) {
    int k = spec.colors();
    std::vector<Pattern> ps = spec.patterns;
    std::sort(ps.begin(), ps.end(), [](const Pattern& a, const Pattern& b) {
        if (a.kind != b.kind) return a.kind == PatternKind::path;
        return a.size < b.size;
    });
    if (k == 2 && ps[0].kind == PatternKind::path && ps[1].kind == PatternKind::path) {
        int n = ps[0].size, m = ps[1].size;
        if (n >= 2) return m + n / 2 - 1;
        return std::nullopt;
    }
    if (k != 3) return std::nullopt;
    if (ps[0].kind == PatternKind::path && ps[1].kind == PatternKind::path && ps[2].kind == PatternKind::path) {
        int p1 = ps[0].size, n = ps[1].size, m = ps[2].size;
        if (p1 == 3) {
            if (n == 3 && (m == 3 || m == 4)) return 5;
            return m + n / 2 - 1;
        }
        if (conjectured && p1 >= 4 && p1 == n && n == m) return p1 % 2 == 1 ? 2 * p1 - 1 : 2 * p1 - 2;
        return std::nullopt;
    }
    if (ps[0].kind == PatternKind::path && ps[0].size == 3 && ps[1].kind == PatternKind::matching &&
        ps[2].kind == PatternKind::matching) {
        int n = ps[1].size, m = ps[2].size;
        if (n >= 3) return 2 * m + n - 1;
    }
    return std::nullopt;
}

struct ProbeRecord {
    int n = 0;
    Verdict verdict = Verdict::exhausted;
    SearchStats stats;
};

struct RamseyResult {
    int value = 0;
    std::optional<EdgeColoring> lower_witness;  // GOOD coloring on value-1 vertices (absent for value 1)
    SearchStats upper_stats;                    // exhaustion statistics at `value`
    std::vector<ProbeRecord> probes;            // in execution order
};

// A probe hit its time limit; carries everything established so far.
class ramsey_timeout_error : public resource_error {
  public:
    int probe_n;
    std::vector<ProbeRecord> probes;
    std::optional<EdgeColoring> best_witness;
    int best_witness_n;

    ramsey_timeout_error(int n, std::vector<ProbeRecord> ps, std::optional<EdgeColoring> w, int wn)
        : resource_error("ramsey_number: search timed out at N=" + std::to_string(n)),
          probe_n(n),
          probes(std::move(ps)),
          best_witness(std::move(w)),
          best_witness_n(wn) {}
};

/// Smallest N such that no GOOD coloring of K_N exists.  Probes start at
/// the predicted lower bound when the spec has one and ascend (or descend
/// when the first probe is already exhausted).
inline RamseyResult ramsey_number(const TargetSpec& spec, const SearchConfig& cfg) {
    std::map<int, SearchOutcome> memo;
    std::vector<ProbeRecord> probes;
    auto probe = [&](int n) -> SearchOutcome& {
        auto it = memo.find(n);
        if (it == memo.end()) {
            it = memo.emplace(n, find_good_coloring(n, spec, cfg)).first;
            probes.push_back({n, it->second.verdict, it->second.stats});
        }
        return it->second;
    };

    auto pred = predicted_value(spec);
    int N = pred ? std::max(1, *pred - 1) : 2;
    while (true) {
        SearchOutcome& out = probe(N);
        if (out.verdict == Verdict::timeout) {
            std::optional<EdgeColoring> w;
            int wn = -1;
            for (auto& [n, o] : memo)
                if (o.verdict == Verdict::found && n > wn) {
                    w = o.witness;
                    wn = n;
                }
            throw ramsey_timeout_error(N, probes, w, wn);
        }
        if (out.verdict == Verdict::found) {
            auto above = memo.find(N + 1);
            if (above != memo.end() && above->second.verdict == Verdict::exhausted)
                return {N + 1, out.witness, above->second.stats, probes};
            if (N + 1 > kMaxVertices)
                throw resource_error("ramsey_number: value exceeds the 32-vertex host limit");
            N = N + 1;
        } else {
            if (N == 1) return {1, std::nullopt, out.stats, probes};
            auto below = memo.find(N - 1);
            if (below != memo.end() && below->second.verdict == Verdict::found)
                return {N, below->second.witness, out.stats, probes};
            N = N - 1;
        }
    }
}

struct LemmaK34Result {
    bool holds = false;
    int colorings_checked = 0;
};

/// Exhaustively checks the K_{3,4}-minus-an-edge lemma: every red/blue
/// coloring of its 11 edges has a red P3 or a blue P7.
inline LemmaK34Result verify_lemma_k34() {
    Graph host(7);  // X = {0,1,2}, Y = {3,4,5,6}, edge (0,3) removed
    for (int x = 0; x < 3; ++x)
        for (int y = 3; y < 7; ++y)
            if (!(x == 0 && y == 3)) host.add_edge(x, y);
    auto edges = host.edges();
    int m = static_cast<int>(edges.size());
    LemmaK34Result res;
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        Graph red(7), blue(7);
        for (int e = 0; e < m; ++e) {
            auto [i, j] = edges[static_cast<size_t>(e)];
            ((mask >> e) & 1 ? red : blue).add_edge(i, j);
        }
        ++res.colorings_checked;
        if (!has_path_of_order(red, 3) && !has_path_of_order(blue, 7)) return res;  // counterexample
    }
    res.holds = true;
    return res;
}

enum class TableStatus { match, mismatch, timeout };

inline const char* to_string(TableStatus s) {
    switch (s) {
        case TableStatus::match: return "MATCH";
        case TableStatus::mismatch: return "MISMATCH";
        default: return "TIMEOUT";
    }
}

struct TableRow {
    TargetSpec spec;
    int predicted = 0;
    std::optional<int> computed;
    TableStatus status = TableStatus::match;
    SearchStats total;      // summed over probes
    uint64_t nodes = 0;
    double seconds = 0.0;
    std::string diagnostic;  // filled on mismatch
};

/// Every paper-resolved spec whose predicted value fits max_vertices, in
/// increasing order of predicted value.
inline std::vector<std::pair<TargetSpec, int>> resolved_specs_up_to(int max_vertices) {
    std::vector<std::pair<TargetSpec, int>> specs;
    for (int n = 2; n <= max_vertices + 1; ++n)
        for (int m = n; m + n / 2 - 1 <= max_vertices; ++m)
            specs.push_back({TargetSpec{path_pattern(n), path_pattern(m)}, m + n / 2 - 1});
    for (int n = 3; n <= max_vertices + 1; ++n)
        for (int m = n; m + n / 2 - 1 <= max_vertices || (n == 3 && m <= 4); ++m) {
            TargetSpec spec{path_pattern(3), path_pattern(n), path_pattern(m)};
            int pred = *predicted_value(spec);
            if (pred > max_vertices) break;
            specs.push_back({spec, pred});
        }
    for (int n = 3; 2 * n + n - 1 <= max_vertices; ++n)
        for (int m = n; 2 * m + n - 1 <= max_vertices; ++m)
            specs.push_back({TargetSpec{path_pattern(3), matching_pattern(n), matching_pattern(m)}, 2 * m + n - 1});
    std::stable_sort(specs.begin(), specs.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    return specs;
}

/// Runs ramsey_number for every resolved spec with predicted value at most
/// max_vertices and compares.  Stops at the first MISMATCH.
inline std::vector<TableRow> verify_table(int max_vertices, const SearchConfig& cfg) {
    if (max_vertices > kMaxVertices) throw std::invalid_argument("verify_table: max_vertices must be <= 32");
    std::vector<TableRow> rows;
    for (auto& [spec, pred] : resolved_specs_up_to(max_vertices)) {
        TableRow row;
        row.spec = spec;
        row.predicted = pred;
        try {
            RamseyResult r = ramsey_number(spec, cfg);
            row.computed = r.value;
            for (const auto& p : r.probes) row.total += p.stats;
            row.nodes = row.total.nodes;
            row.seconds = row.total.seconds;
            row.status = r.value == pred ? TableStatus::match : TableStatus::mismatch;
            if (row.status == TableStatus::mismatch) {
                row.diagnostic = "computed " + std::to_string(r.value) + " != predicted " + std::to_string(pred);
                rows.push_back(std::move(row));
                break;  // a mismatch invalidates the reproduction; stop with diagnostics
            }
        } catch (const ramsey_timeout_error& e) {
            row.status = TableStatus::timeout;
            for (const auto& p : e.probes) row.total += p.stats;
            row.nodes = row.total.nodes;
            row.seconds = row.total.seconds;
            row.diagnostic = "timed out at N=" + std::to_string(e.probe_n);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ramsey
