#include "catch_amalgamated.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/oracles.hpp"
#include "ramsey/witness.hpp"
#include "test_util.hpp"

using namespace ramsey;

TEST_CASE("two_color_lower structure and goodness") {
    SECTION("(6,6): K7, verified by the oracle") {
        EdgeColoring c = two_color_lower(6, 6);
        CHECK(c.host.n == 7);
        CHECK(coloring_is_good(c, TargetSpec{path_pattern(6), path_pattern(6)}).good);
    }
    SECTION("(3,5): K4 with one clique class, the other empty") {
        EdgeColoring c = two_color_lower(3, 5);
        CHECK(c.host.n == 4);
        CHECK(c.color_class(1) == complete_graph(4));
        CHECK(c.color_class(0).edge_count() == 0);
        CHECK(coloring_is_good(c, TargetSpec{path_pattern(3), path_pattern(5)}).good);
    }
    SECTION("(8,8): the join class tops out at 7 vertices") {
        EdgeColoring c = two_color_lower(8, 8);
        CHECK(c.host.n == 10);
        CHECK(longest_path_order(c.color_class(0)) == 7);
    }
    SECTION("whole range up to 14-vertex hosts") {
        for (int n = 2; n <= 14; ++n)
            for (int m = n; m + n / 2 - 2 <= 14; ++m) {
                if (m + n / 2 - 2 < 1) continue;
                EdgeColoring c = two_color_lower(n, m);
                CAPTURE(n, m);
                CHECK(coloring_is_good(c, TargetSpec{path_pattern(n), path_pattern(m)}).good);
            }
    }
    CHECK_THROWS_AS(two_color_lower(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(two_color_lower(6, 5), std::invalid_argument);
    CHECK_THROWS_AS(two_color_lower(20, 30), resource_error);
}

TEST_CASE("three_color_lower: green empty, GOOD for (P3,Pn,Pm)") {
    for (auto [n, m, host] : std::vector<std::array<int, 3>>{{6, 6, 7}, {7, 7, 8}, {8, 8, 10}}) {
        EdgeColoring c = three_color_lower(n, m);
        CAPTURE(n, m);
        CHECK(c.host.n == host);
        CHECK(c.color_class(0).edge_count() == 0);
        CHECK(coloring_is_good(c, TargetSpec{path_pattern(3), path_pattern(n), path_pattern(m)}).good);
    }
    for (int n = 2; n <= 14; ++n)
        for (int m = n; m + n / 2 - 2 <= 14; ++m) {
            if (m + n / 2 - 2 < 1) continue;
            EdgeColoring c = three_color_lower(n, m);
            CAPTURE(n, m);
            CHECK(coloring_is_good(c, TargetSpec{path_pattern(3), path_pattern(n), path_pattern(m)}).good);
        }
}

TEST_CASE("schelp_blocks") {
    SECTION("m=1 is the 4-cycle, each class a perfect matching") {
        EdgeColoring c = schelp_blocks(1);
        CHECK(c.host.n == 4);
        CHECK(c.host.edge_count() == 4);
        CHECK(c.host.min_degree() == 2);
        CHECK(longest_path_order(c.color_class(0)) == 2);
        CHECK(longest_path_order(c.color_class(1)) == 2);
    }
    SECTION("m=2") {
        EdgeColoring c = schelp_blocks(2);
        CHECK(c.host.n == 8);
        CHECK(c.host.min_degree() == 5);
        CHECK(longest_path_order(c.color_class(0)) == 4);
        CHECK(longest_path_order(c.color_class(1)) == 4);
    }
    SECTION("m=3: minimum degree (3/4)|V| - 1") {
        EdgeColoring c = schelp_blocks(3);
        CHECK(c.host.n == 12);
        CHECK(c.host.min_degree() == 8);
    }
    SECTION("host size and mono path length for m = 1..3") {
        for (int m = 1; m <= 3; ++m) {
            EdgeColoring c = schelp_blocks(m);
            CAPTURE(m);
            CHECK(c.host.edge_count() == 4 * m * (4 * m - 1) / 2 - 2 * m * m);
            CHECK(c.host.min_degree() == 3 * m - 1);
            CHECK(longest_path_order(c.color_class(0)) == 2 * m);
            CHECK(longest_path_order(c.color_class(1)) == 2 * m);
        }
    }
    SECTION("intra-block override recolors within blocks only") {
        EdgeColoring c = schelp_blocks(2, {1, 1, 0, 0});
        CHECK(c.color_of(0, 1) == 1);   // inside A1
        CHECK(c.color_of(4, 5) == 0);   // inside A3
        CHECK(c.color_of(0, 4) == 0);   // A1-A3 stays red
        CHECK(c.color_of(0, 6) == 1);   // A1-A4 stays blue
    }
    CHECK_THROWS_AS(schelp_blocks(0), std::invalid_argument);
    CHECK_THROWS_AS(schelp_blocks(9), resource_error);
}

TEST_CASE("matching_lower") {
    SECTION("(3,3) on K7") {
        EdgeColoring c = matching_lower(3, 3);
        CHECK(c.host.n == 7);
        CHECK(c.color_class(0).edge_count() == 0);
        CHECK(max_matching_size(c.color_class(1)) == 2);
        CHECK(max_matching_size(c.color_class(2)) == 2);
        CHECK(coloring_is_good(c, TargetSpec{path_pattern(3), matching_pattern(3), matching_pattern(3)}).good);
    }
    SECTION("(3,4) on K9") {
        EdgeColoring c = matching_lower(3, 4);
        CHECK(c.host.n == 9);
        CHECK(max_matching_size(c.color_class(1)) == 2);
        CHECK(max_matching_size(c.color_class(2)) == 3);
    }
    SECTION("(4,4): red matching number n-1") {
        EdgeColoring c = matching_lower(4, 4);
        CHECK(c.host.n == 10);
        CHECK(max_matching_size(c.color_class(1)) == 3);
    }
    SECTION("matching numbers exact over 3 <= n <= m <= 7") {
        for (int n = 3; n <= 7; ++n)
            for (int m = n; m <= 7; ++m) {
                EdgeColoring c = matching_lower(n, m);
                CAPTURE(n, m);
                CHECK(max_matching_size(c.color_class(1)) == n - 1);
                CHECK(max_matching_size(c.color_class(2)) == m - 1);
                CHECK(coloring_is_good(c, TargetSpec{path_pattern(3), matching_pattern(n), matching_pattern(m)})
                          .good);
            }
    }
    CHECK_THROWS_AS(matching_lower(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(matching_lower(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(matching_lower(10, 14), resource_error);
}

TEST_CASE("generators are deterministic") {
    CHECK(serialize_witness(two_color_lower(5, 7)) == serialize_witness(two_color_lower(5, 7)));
    CHECK(serialize_witness(three_color_lower(6, 8)) == serialize_witness(three_color_lower(6, 8)));
    CHECK(serialize_witness(schelp_blocks(2)) == serialize_witness(schelp_blocks(2)));
    CHECK(serialize_witness(matching_lower(3, 5)) == serialize_witness(matching_lower(3, 5)));
}
