#include <random>

#include "catch_amalgamated.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/witness.hpp"
#include "test_util.hpp"

using namespace ramsey;
using namespace ramsey_test;

TEST_CASE("serialize -> parse -> serialize is byte-identical") {
    std::vector<EdgeColoring> cases;
    cases.push_back(two_color_lower(6, 6));
    cases.push_back(three_color_lower(5, 7));
    cases.push_back(schelp_blocks(2));  // non-complete host
    cases.push_back(matching_lower(3, 4));
    std::mt19937 rng(kSeed);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 2 + static_cast<int>(rng() % 10);
        cases.push_back(random_coloring(rng, random_graph(rng, n, 0.6), 1 + static_cast<int>(rng() % 3)));
    }
    for (const auto& c : cases) {
        std::string text = serialize_witness(c);
        EdgeColoring parsed = parse_witness(text);
        CHECK(parsed == c);
        CHECK(serialize_witness(parsed) == text);
    }
}

TEST_CASE("format details") {
    EdgeColoring c(complete_graph(4), 3, 1);
    c.set_color(0, 1, 0);
    c.set_color(2, 3, 2);
    CHECK(serialize_witness(c) == "4 3\n*\n011112\n");

    Graph host(4);
    host.add_edge(0, 1);
    host.add_edge(2, 3);
    EdgeColoring d(host, 2, 0);
    d.set_color(2, 3, 1);
    CHECK(serialize_witness(d) == "4 2\n100001\n0----1\n");
}

TEST_CASE("parser accepts an explicit all-ones hostmask") {
    EdgeColoring parsed = parse_witness("4 2\n111111\n010101\n");
    CHECK(parsed.host == complete_graph(4));
    CHECK(parsed.color_of(0, 2) == 1);
}

TEST_CASE("parser rejects malformed input with line/col positions") {
    auto col_of = [](const std::string& text) {
        try {
            parse_witness(text);
        } catch (const witness_parse_error& e) {
            return std::pair<int, int>{e.line, e.col};
        }
        return std::pair<int, int>{0, 0};
    };

    CHECK_THROWS_AS(parse_witness(""), witness_parse_error);
    CHECK_THROWS_AS(parse_witness("4 2\n*\n"), witness_parse_error);           // truncated
    CHECK_THROWS_AS(parse_witness("4 2\n*\n010101"), witness_parse_error);     // missing trailing newline
    CHECK_THROWS_AS(parse_witness("4 2\n*\n010101\nx"), witness_parse_error);  // trailing garbage
    CHECK_THROWS_AS(parse_witness("4\n*\n010101\n"), witness_parse_error);
    CHECK_THROWS_AS(parse_witness("0 2\n*\n\n"), witness_parse_error);
    CHECK_THROWS_AS(parse_witness("4 9\n*\n010101\n"), witness_parse_error);
    CHECK_THROWS_AS(parse_witness("4 2\n11111\n010101\n"), witness_parse_error);   // short hostmask
    CHECK_THROWS_AS(parse_witness("4 2\n*\n010102\n"), witness_parse_error);       // digit out of range
    CHECK_THROWS_AS(parse_witness("4 2\n*\n0101-1\n"), witness_parse_error);       // '-' on a host edge
    CHECK_THROWS_AS(parse_witness("4 2\n100001\n0---11\n"), witness_parse_error);  // color on a non-edge

    CHECK(col_of("4 2\n*\n010102\n") == std::pair<int, int>{3, 6});
    CHECK(col_of("4 2\n1x1111\n010101\n") == std::pair<int, int>{2, 2});
}

TEST_CASE("file round trip") {
    EdgeColoring c = three_color_lower(6, 6);
    std::string path = "witness_roundtrip.tmp";
    write_witness_file(path, c);
    EdgeColoring back = read_witness_file(path);
    CHECK(back == c);
    std::remove(path.c_str());
    CHECK_THROWS(read_witness_file("does_not_exist.tmp"));
}
