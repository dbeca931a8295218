// End-to-end exit-code and output checks against the built binary.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "catch_amalgamated.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RAMSEY_CLI_PATH) + " " + args + " 2>&1";
    RunResult res;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), p) != nullptr) res.out += buf.data();
    int status = pclose(p);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("compute: values, predictions, exit codes") {
    auto r = run_cli("compute P3 P3 P5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "R(P3,P3,P5) = 5"));
    CHECK(contains(r.out, "predicted: 5"));

    r = run_cli("compute P6 P6");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "R(P6,P6) = 8"));

    r = run_cli("compute P3 3K2 3K2");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "R(P3,3K2,3K2) = 8"));

    r = run_cli("compute P3 QX");
    CHECK(r.code == 2);

    r = run_cli("compute P3");
    CHECK(r.code == 2);

    r = run_cli("compute P3 P4 P4 --workers 4");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "= 5"));

    r = run_cli("compute P3 P8 P8 --budget 0.000001");
    CHECK(r.code == 3);
    CHECK(contains(r.out, "TIMEOUT"));

    r = run_cli("compute P3 P4 P5 --json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"verdict\":\"EXHAUSTED\""));
    CHECK(contains(r.out, "\"value\":6"));
}

TEST_CASE("construct then check round-trips") {
    auto r = run_cli("construct three-color 6 6 --out cli_three.tmp");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "written to cli_three.tmp"));

    r = run_cli("check cli_three.tmp P3 P6 P6");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "GOOD"));

    r = run_cli("check cli_three.tmp P3 P4 P4");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "NOT GOOD"));
    CHECK(contains(r.out, "VIOLATED"));

    std::remove("cli_three.tmp");
}

TEST_CASE("compute --out produces a checkable witness") {
    auto r = run_cli("compute P3 P5 P6 --out cli_w.tmp");
    CHECK(r.code == 0);
    r = run_cli("check cli_w.tmp P3 P5 P6");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "GOOD"));
    std::remove("cli_w.tmp");
}

TEST_CASE("check rejects malformed files with exit 2") {
    {
        std::ofstream f("cli_bad.tmp", std::ios::binary);
        f << "5 2\n*\n";  // truncated
    }
    auto r = run_cli("check cli_bad.tmp P4 P4");
    CHECK(r.code == 2);
    CHECK(contains(r.out, "line"));
    std::remove("cli_bad.tmp");

    r = run_cli("check no_such_file.tmp P4 P4");
    CHECK(r.code == 2);
}

TEST_CASE("check catches an all-red clique") {
    {
        std::ofstream f("cli_red.tmp", std::ios::binary);
        f << "5 3\n*\n1111111111\n";
    }
    auto r = run_cli("check cli_red.tmp P3 P4 P4");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "VIOLATED"));
    std::remove("cli_red.tmp");
}

TEST_CASE("construct subcommands report the checked properties") {
    auto r = run_cli("construct schelp 3 --out cli_schelp.tmp");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "min degree 8"));
    CHECK(contains(r.out, "longest path 6"));
    std::remove("cli_schelp.tmp");

    r = run_cli("construct matching 3 4 --out cli_m.tmp");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "matching number 2"));
    CHECK(contains(r.out, "matching number 3"));
    std::remove("cli_m.tmp");

    r = run_cli("construct extremal --t 2 --n 4 --r 0 --out cli_e.tmp");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "12 edges"));
    std::remove("cli_e.tmp");

    r = run_cli("construct two-color 0 4");
    CHECK(r.code == 2);

    r = run_cli("construct extremal --t 1 --n 5 --r 3 --odd-join 0 --out cli_oj.tmp");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "13 edges"));
    std::remove("cli_oj.tmp");
}

TEST_CASE("table exit codes") {
    auto r = run_cli("table --max 5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "MATCH"));
    CHECK(contains(r.out, "R(P3,P3,P4)"));
    CHECK(!contains(r.out, "MISMATCH"));

    r = run_cli("table --max 6 --json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"status\":\"MATCH\""));

    r = run_cli("table --max 9 --budget 0.0005");
    CHECK(r.code == 3);

    r = run_cli("table --max 9 --budget 0.0005 --allow-timeout");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "TIMEOUT"));
}

TEST_CASE("lemma subcommand") {
    auto r = run_cli("lemma k34");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "2048 colorings checked: pass"));

    r = run_cli("lemma nosuch");
    CHECK(r.code == 2);
}
