#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hopfres/json_io.hpp"

// HOPFRES_BIN and GOLDEN_DIR are injected by the build.

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/hopfres_cli_out.txt";
    std::string cmd = std::string(HOPFRES_BIN) + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture(const std::string& name) {
    return std::string(GOLDEN_DIR) + "/" + name;
}

} // namespace

TEST_CASE("golden outputs, byte for byte") {
    struct Case {
        std::string args;
        std::string expected;
    };
    std::vector<Case> cases = {
        {"classify " + fixture("I3.json") + " --json", "classify_I3.expected"},
        {"classify " + fixture("diag1m1.json") + " --json", "classify_diag1m1.expected"},
        {"cohomology h " + fixture("F_geom.json") + " " + fixture("I3.json") + " --json",
         "coh_h_geom.expected"},
        {"cohomology b " + fixture("I2.json") + " " + fixture("I2.json") + " --json",
         "coh_b_I2.expected"},
        {"cohomology cz2 --tau sign --json", "coh_cz2_sign.expected"},
        {"cohomology cz2 --tau trivial --json", "coh_cz2_trivial.expected"},
        {"cohomology a " + fixture("I2.json") + " " + fixture("charA_trivial.json") + " --json",
         "coh_a_I2.expected"},
        {"cohomology h " + fixture("I2.json") + " " + fixture("minusI2.json") + " --json",
         "coh_h_epsbar.expected"},
        {"bialgebra h " + fixture("I2.json") + " --json", "bia_h_I2.expected"},
        {"bialgebra a " + fixture("I2.json") + " --json", "bia_a_I2.expected"},
        {"cohomology a " + fixture("I2.json") + " " + fixture("charA_sign.json") + " --json",
         "coh_a_I2_sign.expected"},
    };
    for (const Case& c : cases) {
        CAPTURE(c.args);
        RunResult r = run(c.args);
        CHECK(r.exit_code == 0);
        CHECK(r.output == golden(c.expected));
    }
}

TEST_CASE("identical inputs produce byte-identical output") {
    std::string args = "cohomology h " + fixture("F_geom.json") + " " + fixture("I3.json") +
                       " --json";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.output == b.output);
}

TEST_CASE("exit codes") {
    CHECK(run("classify /nonexistent.json").exit_code == 2);
    CHECK(run("classify " + fixture("charA_trivial.json")).exit_code == 2);  // not a matrix
    // character that is not a character
    std::string bad = fixture("diag1m1.json");
    CHECK(run("cohomology b " + fixture("I2.json") + " " +
              fixture("F_geom.json"))
              .exit_code == 2);  // size mismatch
    CHECK(run("verify complex h " + fixture("I2.json") + " --degree-bound 1").exit_code == 3);
    CHECK(run("verify glued " + fixture("I2.json")).exit_code == 0);
    CHECK(run("verify complex b " + fixture("I2.json")).exit_code == 0);
    CHECK(run("verify hopf h " + fixture("I2.json")).exit_code == 0);
}

TEST_CASE("text output carries the dimension table") {
    RunResult r = run("cohomology h " + fixture("F_geom.json") + " " + fixture("I3.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dims (rank):    1 3 1 0") != std::string::npos);
    CHECK(r.output.find("agree: true") != std::string::npos);
}

TEST_CASE("hopf certificates name tensor-square words with the primed alphabet") {
    std::string cert_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                            "/hopfres_certs.json";
    RunResult r =
        run("verify hopf h " + fixture("I2.json") + " --cert-out " + cert_file + " --json");
    CHECK(r.exit_code == 0);
    std::ifstream in(cert_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string certs = ss.str();
    CHECK(certs.find("Delta(rel") != std::string::npos);
    CHECK(certs.find("'") != std::string::npos);  // right-copy letters appear
}

TEST_CASE("matrix JSON round trip") {
    std::string text = R"([["1","0"],["0","1/2+1/3i"]])";
    hopfres::QiMatrix m = hopfres::matrix_from_json_text(text);
    CHECK(hopfres::matrix_to_json_text(m) == text);
    CHECK(m.at(1, 1) ==
          hopfres::GaussianRational(hopfres::Rational(1, 2), hopfres::Rational(1, 3)));
    CHECK_THROWS_AS(hopfres::matrix_from_json_text("[[\"1\",\"2\"],[\"3\"]]"),
                    hopfres::ParseError);
    CHECK_THROWS_AS(hopfres::matrix_from_json_text("[]"), hopfres::ParseError);
    CHECK_THROWS_AS(hopfres::matrix_from_json_text("[[\"1.5\"]]"), hopfres::ParseError);
}

TEST_CASE("sweep over a directory") {
    RunResult r = run("cohomology h --sweep " + std::string(GOLDEN_DIR) + "/sweep");
    CHECK(r.exit_code == 0);
    // deterministic order: one line per file, sorted
    std::string expected_first = std::string(GOLDEN_DIR) + "/sweep/a_I2.json: 1 4 3 1";
    CHECK(r.output.substr(0, expected_first.size()) == expected_first);
    // parallel execution must not perturb the output
    RunResult again = run("cohomology h --sweep " + std::string(GOLDEN_DIR) + "/sweep");
    CHECK(again.output == r.output);
}
