// Command-line front end: computes small path/matching Ramsey numbers by
// exhaustive search, emits and re-verifies witness colorings, generates the
// explicit lower-bound constructions, and reproduces the value table.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/constructions.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/oracles.hpp"
#include "ramsey/ramsey.hpp"
#include "ramsey/search.hpp"
#include "ramsey/witness.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

std::string color_name(int c, int k) {
    if (k == 3) {
        static const char* names[] = {"green", "red", "blue"};
        return names[c];
    }
    if (k == 2) {
        static const char* names[] = {"red", "blue"};
        return names[c];
    }
    return "color" + std::to_string(c);
}

json stats_json(int n, ramsey::Verdict verdict, const ramsey::SearchStats& st) {
    return json{{"n", n},
                {"verdict", ramsey::to_string(verdict)},
                {"nodes", st.nodes},
                {"oracle_prunes", st.oracle_prunes},
                {"symmetry_prunes", st.symmetry_prunes},
                {"seconds", st.seconds}};
}

void print_probe(int n, ramsey::Verdict verdict, const ramsey::SearchStats& st, bool as_json) {
    if (as_json) {
        std::cout << stats_json(n, verdict, st).dump() << "\n";
    } else {
        std::printf("probe n=%d: %s  (nodes=%llu oracle_prunes=%llu symmetry_prunes=%llu seconds=%.3f)\n", n,
                    ramsey::to_string(verdict), static_cast<unsigned long long>(st.nodes),
                    static_cast<unsigned long long>(st.oracle_prunes),
                    static_cast<unsigned long long>(st.symmetry_prunes), st.seconds);
    }
}

void print_class_properties(const ramsey::EdgeColoring& c) {
    for (int col = 0; col < c.k; ++col) {
        ramsey::Graph cls = c.color_class(col);
        std::printf("  %-6s: %2d edges, longest path %d, matching number %d\n", color_name(col, c.k).c_str(),
                    cls.edge_count(), ramsey::longest_path_order(cls), ramsey::max_matching_size(cls));
    }
    std::printf("  host  : %d vertices, %d edges, min degree %d\n", c.host.n, c.host.edge_count(),
                c.host.min_degree());
}

std::string spec_label(const ramsey::TargetSpec& spec) { return ramsey::to_string(spec); }

int run_compute(const std::vector<std::string>& targets, const std::string& out_path, double budget,
                ramsey::SymmetryLevel sym, int workers, bool deterministic, bool as_json, bool conjectured) {
    ramsey::TargetSpec spec = ramsey::parse_target_spec(targets);
    if (spec.colors() < 2 || spec.colors() > 3) throw std::invalid_argument("compute expects 2 or 3 targets");
    ramsey::SearchConfig cfg{budget, sym, workers, deterministic};

    auto predicted = ramsey::predicted_value(spec, conjectured);
    if (!as_json) {
        if (predicted)
            std::printf("predicted: %d\n", *predicted);
        else
            std::printf("predicted: none\n");
    }

    try {
        ramsey::RamseyResult res = ramsey::ramsey_number(spec, cfg);
        for (const auto& p : res.probes) print_probe(p.n, p.verdict, p.stats, as_json);
        if (as_json) {
            json j{{"spec", spec_label(spec)}, {"value", res.value}};
            if (predicted) j["predicted"] = *predicted;
            std::cout << j.dump() << "\n";
        } else {
            std::printf("%s = %d\n", spec_label(spec).c_str(), res.value);
        }
        if (!out_path.empty() && res.lower_witness) {
            ramsey::write_witness_file(out_path, *res.lower_witness);
            if (!as_json) std::printf("witness on %d vertices written to %s\n", res.value - 1, out_path.c_str());
        }
        if (predicted && *predicted != res.value) {
            std::printf("MISMATCH: computed %d, predicted %d\n", res.value, *predicted);
            return kExitVerificationFailed;
        }
        return kExitOk;
    } catch (const ramsey::ramsey_timeout_error& e) {
        for (const auto& p : e.probes) print_probe(p.n, p.verdict, p.stats, as_json);
        std::printf("TIMEOUT at n=%d (budget %.0f s per probe)\n", e.probe_n, budget);
        if (!out_path.empty() && e.best_witness) {
            ramsey::write_witness_file(out_path, *e.best_witness);
            std::printf("best witness so far (n=%d) written to %s\n", e.best_witness_n, out_path.c_str());
        }
        return kExitResourceLimit;
    }
}

int run_check(const std::string& path, const std::vector<std::string>& targets) {
    ramsey::EdgeColoring coloring = ramsey::read_witness_file(path);
    ramsey::TargetSpec spec = ramsey::parse_target_spec(targets);
    if (spec.colors() != coloring.k)
        throw std::invalid_argument("file has " + std::to_string(coloring.k) + " colors but " +
                                    std::to_string(spec.colors()) + " targets were given");
    ramsey::GoodnessReport rep = ramsey::coloring_is_good(coloring, spec);
    for (int c = 0; c < coloring.k; ++c) {
        const auto& v = rep.per_color[static_cast<size_t>(c)];
        const auto& pat = spec.patterns[static_cast<size_t>(c)];
        if (!v.violated) {
            std::printf("color %d (%s, forbids %s): ok\n", c, color_name(c, coloring.k).c_str(),
                        ramsey::to_string(pat).c_str());
            continue;
        }
        std::printf("color %d (%s, forbids %s): VIOLATED —", c, color_name(c, coloring.k).c_str(),
                    ramsey::to_string(pat).c_str());
        if (pat.kind == ramsey::PatternKind::path) {
            std::printf(" path");
            for (int x : v.path) std::printf(" %d", x);
        } else {
            std::printf(" matching");
            for (auto [a, b] : v.matching) std::printf(" %d-%d", a, b);
        }
        std::printf("\n");
    }
    std::printf(rep.good ? "GOOD\n" : "NOT GOOD\n");
    return rep.good ? kExitOk : kExitVerificationFailed;
}

int write_construction(const ramsey::EdgeColoring& c, std::string out_path, const std::string& default_name) {
    if (out_path.empty()) out_path = default_name;
    ramsey::write_witness_file(out_path, c);
    print_class_properties(c);
    std::printf("written to %s\n", out_path.c_str());
    return kExitOk;
}

int run_table(int max_vertices, double budget, ramsey::SymmetryLevel sym, int workers, bool allow_timeout,
              bool as_json) {
    ramsey::SearchConfig cfg{budget, sym, workers, true};
    auto rows = ramsey::verify_table(max_vertices, cfg);
    bool any_mismatch = false;
    bool any_timeout = false;
    if (!as_json)
        std::printf("%-18s %9s %8s %12s %8s  %s\n", "spec", "predicted", "computed", "nodes", "seconds", "status");
    for (const auto& row : rows) {
        any_mismatch |= row.status == ramsey::TableStatus::mismatch;
        any_timeout |= row.status == ramsey::TableStatus::timeout;
        if (as_json) {
            json j{{"spec", spec_label(row.spec)},
                   {"predicted", row.predicted},
                   {"nodes", row.nodes},
                   {"seconds", row.seconds},
                   {"status", ramsey::to_string(row.status)}};
            if (row.computed) j["computed"] = *row.computed;
            if (!row.diagnostic.empty()) j["diagnostic"] = row.diagnostic;
            std::cout << j.dump() << "\n";
        } else {
            std::printf("%-18s %9d %8s %12llu %8.2f  %s%s%s\n", spec_label(row.spec).c_str(), row.predicted,
                        row.computed ? std::to_string(*row.computed).c_str() : "-",
                        static_cast<unsigned long long>(row.nodes), row.seconds, ramsey::to_string(row.status),
                        row.diagnostic.empty() ? "" : "  ", row.diagnostic.c_str());
        }
    }
    if (any_mismatch) return kExitVerificationFailed;
    if (any_timeout && !allow_timeout) return kExitResourceLimit;
    return kExitOk;
}

int run_lemma(const std::string& name) {
    if (name == "k34") {
        auto res = ramsey::verify_lemma_k34();
        std::printf("%d colorings checked: %s\n", res.colorings_checked, res.holds ? "pass" : "FAIL");
        return res.holds ? kExitOk : kExitVerificationFailed;
    }
    if (name == "ex-corollary") {
        uint64_t nodes = 0;
        bool ok = true;
        for (int nv = 3; nv <= 8; ++nv)
            for (int p : {4, 5, 6}) {
                auto res = ramsey::ex_bruteforce(nv, p);
                nodes += res.nodes;
                int expect = ramsey::ex_formula(nv, p);
                if (res.max_edges != expect) {
                    std::printf("ex(%d,P%d): enumeration gives %d, formula gives %d\n", nv, p, res.max_edges,
                                expect);
                    ok = false;
                }
            }
        std::printf("18 values compared, %llu enumeration nodes: %s\n", static_cast<unsigned long long>(nodes),
                    ok ? "pass" : "FAIL");
        return ok ? kExitOk : kExitVerificationFailed;
    }
    throw std::invalid_argument("unknown lemma '" + name + "' (expected k34 or ex-corollary)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"small multicolor path Ramsey numbers: search, witnesses, constructions"};
    app.require_subcommand(1);

    std::map<std::string, ramsey::SymmetryLevel> sym_map{{"none", ramsey::SymmetryLevel::none},
                                                         {"first-edge", ramsey::SymmetryLevel::first_edge},
                                                         {"vertex-orbits", ramsey::SymmetryLevel::vertex_orbits}};

    // compute
    auto* compute = app.add_subcommand("compute", "compute a Ramsey number by exhaustive search");
    std::vector<std::string> compute_targets;
    std::string compute_out;
    double compute_budget = 300.0;
    ramsey::SymmetryLevel compute_sym = ramsey::SymmetryLevel::vertex_orbits;
    int compute_workers = 1;
    bool compute_json = false, compute_conjectured = false, compute_nondet = false;
    compute->add_option("targets", compute_targets, "per-color targets, e.g. P3 P6 P6 or P3 3K2 3K2")
        ->required()
        ->expected(2, 3);
    compute->add_option("--out", compute_out, "write the lower-bound witness file here");
    compute->add_option("--budget", compute_budget, "time limit per probe in seconds (0 = unlimited)");
    compute->add_option("--symmetry", compute_sym, "symmetry pruning level")
        ->transform(CLI::CheckedTransformer(sym_map, CLI::ignore_case));
    compute->add_option("--workers", compute_workers, "top-level branch fan-out");
    compute->add_flag("--non-deterministic", compute_nondet, "allow any witness under parallel search");
    compute->add_flag("--json", compute_json, "emit one JSON record per probe");
    compute->add_flag("--conjectured", compute_conjectured, "also predict the unproven equal-paths family");

    // check
    auto* check = app.add_subcommand("check", "re-verify a witness file against targets");
    std::string check_file;
    std::vector<std::string> check_targets;
    check->add_option("file", check_file, "witness file")->required();
    check->add_option("targets", check_targets, "per-color targets")->required()->expected(2, 3);

    // construct
    auto* construct = app.add_subcommand("construct", "generate an explicit lower-bound coloring");
    construct->require_subcommand(1);
    int c_n = 0, c_m = 0, schelp_m = 0;
    std::string construct_out, schelp_blocks_str = "rrrr";
    auto* c_two = construct->add_subcommand("two-color", "2-coloring with no P_n in red, no P_m in blue");
    c_two->add_option("n", c_n)->required();
    c_two->add_option("m", c_m)->required();
    c_two->add_option("--out", construct_out);
    auto* c_three = construct->add_subcommand("three-color", "3-coloring with empty green class");
    c_three->add_option("n", c_n)->required();
    c_three->add_option("m", c_m)->required();
    c_three->add_option("--out", construct_out);
    auto* c_schelp = construct->add_subcommand("schelp", "four-block minimum-degree sharpness example");
    c_schelp->add_option("m", schelp_m, "block size")->required();
    c_schelp->add_option("--blocks", schelp_blocks_str, "intra-block colors, four chars over r/b");
    c_schelp->add_option("--out", construct_out);
    auto* c_matching = construct->add_subcommand("matching", "3-coloring avoiding nK2 in red, mK2 in blue");
    c_matching->add_option("n", c_n)->required();
    c_matching->add_option("m", c_m)->required();
    c_matching->add_option("--out", construct_out);
    auto* c_extremal = construct->add_subcommand("extremal", "path-free graph attaining the edge bound");
    int e_t = 0, e_n = 0, e_r = 0, e_l = -1;
    c_extremal->add_option("--t", e_t, "number of full cliques")->required();
    c_extremal->add_option("--n", e_n, "clique size (no path on n+1 vertices)")->required();
    c_extremal->add_option("--r", e_r, "remainder block size")->required();
    c_extremal->add_option("--odd-join", e_l, "use the odd-n join variant with l full cliques");
    c_extremal->add_option("--out", construct_out);

    // table
    auto* table = app.add_subcommand("table", "recompute every resolved value up to a host size");
    int table_max = 8;
    double table_budget = 300.0;
    ramsey::SymmetryLevel table_sym = ramsey::SymmetryLevel::vertex_orbits;
    int table_workers = 1;
    bool table_allow_timeout = false, table_json = false;
    table->add_option("--max", table_max, "largest predicted value to include");
    table->add_option("--budget", table_budget, "time limit per probe in seconds");
    table->add_option("--symmetry", table_sym, "symmetry pruning level")
        ->transform(CLI::CheckedTransformer(sym_map, CLI::ignore_case));
    table->add_option("--workers", table_workers, "top-level branch fan-out");
    table->add_flag("--allow-timeout", table_allow_timeout, "do not fail the exit code on timeouts");
    table->add_flag("--json", table_json, "emit one JSON record per row");

    // lemma
    auto* lemma = app.add_subcommand("lemma", "run an exhaustive auxiliary check");
    std::string lemma_name;
    lemma->add_option("name", lemma_name, "k34 or ex-corollary")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(compute))
            return run_compute(compute_targets, compute_out, compute_budget, compute_sym, compute_workers,
                               !compute_nondet, compute_json, compute_conjectured);
        if (app.got_subcommand(check)) return run_check(check_file, check_targets);
        if (app.got_subcommand(construct)) {
            if (construct->got_subcommand(c_two))
                return write_construction(ramsey::two_color_lower(c_n, c_m), construct_out,
                                          "two-color-" + std::to_string(c_n) + "-" + std::to_string(c_m) +
                                              ".witness");
            if (construct->got_subcommand(c_three))
                return write_construction(ramsey::three_color_lower(c_n, c_m), construct_out,
                                          "three-color-" + std::to_string(c_n) + "-" + std::to_string(c_m) +
                                              ".witness");
            if (construct->got_subcommand(c_schelp)) {
                if (schelp_blocks_str.size() != 4) throw std::invalid_argument("--blocks needs four chars over r/b");
                std::array<int, 4> blocks{};
                for (int i = 0; i < 4; ++i) {
                    char ch = schelp_blocks_str[static_cast<size_t>(i)];
                    if (ch != 'r' && ch != 'b') throw std::invalid_argument("--blocks needs four chars over r/b");
                    blocks[static_cast<size_t>(i)] = ch == 'b' ? 1 : 0;
                }
                return write_construction(ramsey::schelp_blocks(schelp_m, blocks), construct_out,
                                          "schelp-" + std::to_string(schelp_m) + ".witness");
            }
            if (construct->got_subcommand(c_matching))
                return write_construction(ramsey::matching_lower(c_n, c_m), construct_out,
                                          "matching-" + std::to_string(c_n) + "-" + std::to_string(c_m) +
                                              ".witness");
            if (construct->got_subcommand(c_extremal)) {
                ramsey::Graph g = e_l >= 0 ? ramsey::extremal_graph_odd_join(e_t, e_n, e_r, e_l)
                                           : ramsey::extremal_graph_cliques(e_t, e_n, e_r);
                ramsey::EdgeColoring c(g, 1, 0);
                std::string name = "extremal-" + std::to_string(e_t) + "-" + std::to_string(e_n) + "-" +
                                   std::to_string(e_r) + ".witness";
                std::printf("  %d vertices, %d edges (bound %lld), longest path %d (no path on %d vertices)\n",
                            g.n, g.edge_count(), ramsey::fs_bound(g.n, e_n + 1), ramsey::longest_path_order(g),
                            e_n + 1);
                std::string out_path = construct_out.empty() ? name : construct_out;
                ramsey::write_witness_file(out_path, c);
                std::printf("written to %s\n", out_path.c_str());
                return kExitOk;
            }
        }
        if (app.got_subcommand(table))
            return run_table(table_max, table_budget, table_sym, table_workers, table_allow_timeout, table_json);
        if (app.got_subcommand(lemma)) return run_lemma(lemma_name);
    } catch (const ramsey::witness_parse_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    } catch (const ramsey::ramsey_timeout_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitResourceLimit;
    } catch (const ramsey::resource_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitResourceLimit;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
    return kExitInputError;
}
