#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "qbin/json_io.hpp"

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(QBIN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("binom subcommand") {
    auto r = run_cli("binom -3 -5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3\n");

    r = run_cli("binom 5 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    r = run_cli("binom -1 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "q^-3\n");

    r = run_cli("binom --n -3 --k -5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3\n");
}

TEST_CASE("binom json round-trips to the text form") {
    auto rj = run_cli("--format json binom -3 -5");
    CHECK(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["terms"][0]["exp"] == -7);
    CHECK(qbin::to_text(qbin::laurent_from_json(j)) == "q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3");
}

TEST_CASE("binom output is byte-stable") {
    auto a = run_cli("binom 12 6");
    auto b = run_cli("binom 12 6");
    CHECK(a.out == b.out);
}

TEST_CASE("parse errors exit 2") {
    CHECK(run_cli("binom x y").exit_code == 2);
    CHECK(run_cli("binom 3").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("eval subcommand") {
    auto r = run_cli("eval -3 -5 --q 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "6\n");

    r = run_cli("eval 4 2 --q 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "35\n");

    r = run_cli("eval 3 5 --q 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");

    r = run_cli("eval 4 2 --q 1/2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "35/16\n");

    // negative exponents at q=0
    r = run_cli("eval -3 -5 --q 0");
    CHECK(r.exit_code == 4);

    r = run_cli("eval 4 2 --q 1/0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("expand subcommand") {
    auto r = run_cli("expand pos 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x^0: 1\nx^1: 1 + q\nx^2: q\n");

    r = run_cli("expand pos 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x^0: 1\n");

    r = run_cli("expand neg 1 --order 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x^0: 1\nx^1: 1\nx^2: 1\nx^3: 1\n");

    r = run_cli("expand sideways 2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("check subcommand") {
    auto r = run_cli("check qbinsum1 --a 0..6 --b 0..6 --n 0..6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "qbinsum1: checked 343, failures 0\n");

    r = run_cli("check symmetry --n -4..4 --k -4..4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "symmetry: checked 81, failures 0\n");

    CHECK(run_cli("check nosuch").exit_code == 2);
    CHECK(run_cli("check symmetry --n 4..-4").exit_code == 2);
    CHECK(run_cli("check symmetry --n bogus").exit_code == 2);
}

TEST_CASE("check json report") {
    auto r = run_cli("--format json check qbinpos --n 0..3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j[0]["identity"] == "qbinpos");
    CHECK(j[0]["checked"] == 4);
    CHECK(j[0]["failures"].empty());
}

TEST_CASE("perturbed check fails with exit 1") {
    auto r = run_cli("check symmetry --n 0..2 --k 0..2 --perturb");
    CHECK(r.exit_code == 1);
}
