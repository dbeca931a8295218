#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "ramsey/coloring.hpp"

namespace ramsey {

// Malformed witness text; line and column are 1-based.
class witness_parse_error : public std::runtime_error {
  public:
    int line;
    int col;
    witness_parse_error(int l, int c, const std::string& msg)
        : std::runtime_error("witness parse error at line " + std::to_string(l) + ", col " +
                             std::to_string(c) + ": " + msg),
          line(l),
          col(c) {}
};

// Witness file format (bit-exact, ASCII):
//   line 1: "n k", decimal, space-separated
//   line 2: hostmask, C(n,2) chars '1'/'0' in edge_index order, or "*" for a
//           complete host
//   line 3: C(n,2) chars, the color digit per edge in edge_index order, '-'
//           for absent edges
//   trailing newline
inline std::string serialize_witness(const EdgeColoring& c) {
    int n = c.host.n;
    int m = n * (n - 1) / 2;
    std::string out = std::to_string(n) + " " + std::to_string(c.k) + "\n";
    if (c.host.is_complete()) {
        out += "*";
    } else {
        for (int e = 0; e < m; ++e) {
            auto [i, j] = edge_from_index(e, n);
            out += c.host.has_edge(i, j) ? '1' : '0';
        }
    }
    out += "\n";
    for (int e = 0; e < m; ++e) {
        int col = c.color[static_cast<size_t>(e)];
        out += col < 0 ? '-' : static_cast<char>('0' + col);
    }
    out += "\n";
    return out;
}

inline EdgeColoring parse_witness(std::string_view text) {
    // split into newline-terminated lines, tracking positions for diagnostics
    std::array<std::string_view, 3> lines;
    size_t pos = 0;
    for (int ln = 0; ln < 3; ++ln) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            throw witness_parse_error(ln + 1, static_cast<int>(text.size() - pos) + 1,
                                      "unexpected end of file (3 newline-terminated lines required)");
        lines[static_cast<size_t>(ln)] = text.substr(pos, nl - pos);
        pos = nl + 1;
    }
    if (pos != text.size()) throw witness_parse_error(4, 1, "trailing content after line 3");

    // line 1: "n k"
    int n = 0, k = 0;
    {
        std::istringstream iss{std::string(lines[0])};
        std::string rest;
        if (!(iss >> n >> k) || (iss >> rest))
            throw witness_parse_error(1, 1, "expected 'n k'");
        if (n < 1 || n > kMaxVertices) throw witness_parse_error(1, 1, "vertex count out of range [1,32]");
        if (k < 1 || k > kMaxColors) throw witness_parse_error(1, 1, "color count out of range [1,4]");
    }
    int m = n * (n - 1) / 2;

    // line 2: hostmask
    Graph host(n);
    if (lines[1] == "*") {
        host = complete_graph(n);
    } else {
        if (static_cast<int>(lines[1].size()) != m)
            throw witness_parse_error(2, static_cast<int>(lines[1].size()) + 1,
                                      "hostmask must be '*' or exactly " + std::to_string(m) + " characters");
        for (int e = 0; e < m; ++e) {
            char ch = lines[1][static_cast<size_t>(e)];
            if (ch != '0' && ch != '1')
                throw witness_parse_error(2, e + 1, "hostmask character must be '0' or '1'");
            if (ch == '1') {
                auto [i, j] = edge_from_index(e, n);
                host.add_edge(i, j);
            }
        }
    }

    // line 3: per-edge color digits
    if (static_cast<int>(lines[2].size()) != m)
        throw witness_parse_error(3, static_cast<int>(lines[2].size()) + 1,
                                  "color line must be exactly " + std::to_string(m) + " characters");
    EdgeColoring out;
    out.host = host;
    out.k = k;
    for (int e = 0; e < m; ++e) {
        char ch = lines[2][static_cast<size_t>(e)];
        auto [i, j] = edge_from_index(e, n);
        if (ch == '-') {
            if (host.has_edge(i, j))
                throw witness_parse_error(3, e + 1, "host edge is missing a color");
            continue;
        }
        if (ch < '0' || ch >= static_cast<char>('0' + k))
            throw witness_parse_error(3, e + 1, "color digit out of range for k=" + std::to_string(k));
        if (!host.has_edge(i, j))
            throw witness_parse_error(3, e + 1, "color assigned to a non-edge of the host");
        out.set_color(i, j, ch - '0');
    }
    return out;
}

inline void write_witness_file(const std::string& path, const EdgeColoring& c) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << serialize_witness(c);
}

inline EdgeColoring read_witness_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_witness(ss.str());
}

}  // namespace ramsey
