#pragma once

#include <string>
#include <vector>

#include "ramsey/common.hpp"

namespace ramsey {

enum class PatternKind { path, matching };

// Forbidden pattern for one color class: a path on `size` vertices or a
// matching of `size` pairwise disjoint edges (size*K2).
struct Pattern {
    PatternKind kind = PatternKind::path;
    int size = 1;

    bool operator==(const Pattern&) const = default;
};

inline Pattern path_pattern(int p) {
    if (p < 1) throw std::invalid_argument("path pattern: order must be >= 1");
    return {PatternKind::path, p};
}

inline Pattern matching_pattern(int q) {
    if (q < 1) throw std::invalid_argument("matching pattern: size must be >= 1");
    return {PatternKind::matching, q};
}

/// "P6" or "3K2".
inline std::string to_string(const Pattern& p) {
    return p.kind == PatternKind::path ? "P" + std::to_string(p.size) : std::to_string(p.size) + "K2";
}

// One forbidden pattern per color, in color order (green first when 3 colors).
struct TargetSpec {
    std::vector<Pattern> patterns;

    TargetSpec() = default;
    TargetSpec(std::initializer_list<Pattern> ps) : patterns(ps) {}

    int colors() const { return static_cast<int>(patterns.size()); }

    bool operator==(const TargetSpec&) const = default;
};

/// Parse a single color target, "P<k>" or "<q>K2".
inline Pattern parse_pattern(const std::string& tok) {
    auto fail = [&] { throw std::invalid_argument("unparseable target '" + tok + "' (expected P<k> or <q>K2)"); };
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.size() > 4) fail();
        for (char c : s)
            if (c < '0' || c > '9') fail();
        return std::stoi(s);
    };
    if (tok.size() >= 2 && tok[0] == 'P') {
        int p = parse_int(tok.substr(1));
        if (p < 1) fail();
        return path_pattern(p);
    }
    auto k = tok.find("K2");
    if (k != std::string::npos && k + 2 == tok.size() && k > 0) {
        int q = parse_int(tok.substr(0, k));
        if (q < 1) fail();
        return matching_pattern(q);
    }
    fail();
    return {};  // unreachable
}

inline TargetSpec parse_target_spec(const std::vector<std::string>& tokens) {
    TargetSpec spec;
    for (const auto& t : tokens) spec.patterns.push_back(parse_pattern(t));
    return spec;
}

/// "R(P3,P6,P6)"-style name for reports.
inline std::string to_string(const TargetSpec& spec) {
    std::string s = "R(";
    for (int c = 0; c < spec.colors(); ++c) {
        if (c) s += ",";
        s += to_string(spec.patterns[c]);
    }
    return s + ")";
}

}  // namespace ramsey
