#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "foliate/lex.hpp"
#include "foliate/session.hpp"
#include "json.hpp"

using namespace foliate;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::filesystem::path write_temp(const std::string& tag, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / ("foliate_test_" + tag + ".fol");
    std::ofstream out(p, std::ios::binary);
    out << body;
    return p;
}

struct CliResult {
    std::string out;
    int code = -1;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(FOLIATE_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("print is a fixed point of parse") {
    // every declaration and command form, with sloppy spacing and omitted
    // `on` clauses for the canonicalizer to fill in
    std::string src =
        "# full-coverage script\n"
        "ring R = QQ[x, y]\n"
        "der d on R : y -> 3*x^2, x -> -2*y\n"
        "ideal H = <x^3+y^2-1>\n"
        "ideal P = <x - 1, y>\n"
        "ring S = GF(5)[t]\n"
        "der e on S : t -> t\n"
        "hs h on S order 3 from e\n"
        "ideal Q on S = <t - 2>\n"
        "scheme X = (R, H, d)\n"
        "open U = D(x)\n"
        "open W on X = complement <x, y>\n"
        "open V on X = complement P\n"
        "proj F = P(1, QQ, [[0, 1], [0, 0]])\n"
        "proj G = P(2, GF(5), [[1, 0, 0], [0, 2, 0], [0, 0, 1/2]])\n"
        "is_differential H d\n"
        "closure P d\n"
        "trajectory P d deg 3 rounds 8\n"
        "trajectory Q e\n"
        "trajectory Q h deg 2\n"
        "is_leaf X H\n"
        "udelta X U\n"
        "invariant? X U\n"
        "cf_laws X U W V\n"
        "proj_leaves F\n"
        "constant? X x / y\n"
        "extend X x / y order 2\n"
        "compare_constants X D(y) {x / y, x^2 / y^2} order 2\n"
        "verify lemma43 order 2\n"
        "verify prop42 1 order 3\n"
        "verify thetalemma 1\n"
        "verify hs h\n"
        "is_differential Q h\n";
    Session s;
    s.load(src);
    std::string once = s.print();
    Session t;
    t.load(once);
    CHECK(t.print() == once);

    // canonicalization fills in scope clauses and normalizes polynomials
    CHECK(once.find("ideal H on R = <x^3 + y^2 - 1>\n") != std::string::npos);
    CHECK(once.find("open U on X = D(x)\n") != std::string::npos);
    CHECK(once.find("der d on R : x -> -2*y, y -> 3*x^2\n") != std::string::npos);
    // comments are not part of the program
    CHECK(once.find('#') == std::string::npos);
}

TEST_CASE("conserved quantity end to end") {
    Session s;
    s.load(
        "ring R = QQ[x, y]\n"
        "der d on R : x -> -2*y, y -> 3*x^2\n"
        "ideal H = <x^3 + y^2 - 1>\n"
        "is_differential H d\n");
    RunResult r = s.run();
    CHECK(r.exit_code == 0);
    CHECK(r.text == "is_differential H d: true\n");
}

TEST_CASE("failed assertions mark the line and the exit code") {
    Session s;
    s.load(
        "ring R = QQ[x, y]\n"
        "der d on R : x -> 1 - x*y^2, y -> x^2 - y^3\n"
        "ideal L = <x - 1, y - 1>\n"
        "ideal P = <x - 2, y - 1>\n"
        "scheme X = (R, <0>, d)\n"
        "is_leaf X L\n"
        "is_leaf X P\n");
    RunResult r = s.run();
    CHECK(r.exit_code == 1);
    CHECK(r.text.find("is_leaf X L: true\n") != std::string::npos);
    CHECK(r.text.find("is_leaf X P: false [FAILED]\n") != std::string::npos);
}

TEST_CASE("trajectory reporting") {
    Session s;
    s.load(
        "ring R = QQ[x, y]\n"
        "der d on R : x -> -2*y, y -> 3*x^2\n"
        "ideal P = <x - 1, y>\n"
        "trajectory P d\n");
    RunResult r = s.run();
    CHECK(r.exit_code == 0);
    CHECK(r.text.find("trajectory P d: <x^3 + y^2 - 1> [Exact, deg<=3, rounds=") !=
          std::string::npos);
}

TEST_CASE("parse errors carry position and expectation") {
    Session s;
    // dangling operator inside a generator list, on line 3
    try {
        s.load(
            "ring R = QQ[x]\n"
            "\n"
            "ideal P = <x - >\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.found() == "'>'");
    }

    // unknown name
    CHECK_THROWS_AS(s.load("is_differential H d\n"), ParseError);

    // unknown command word
    try {
        s.load("frobnicate x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("'ring'") != std::string::npos);
    }

    // duplicate declaration
    CHECK_THROWS_AS(s.load("ring R = QQ[x]\nring R = QQ[y]\n"), ParseError);

    // ambiguous scope inference
    try {
        s.load("ring R = QQ[x]\nring S = QQ[y]\nideal H = <x>\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("several rings") != std::string::npos);
    }

    // a failed load leaves the session usable
    s.load("ring R = QQ[x]\n");
    CHECK(s.print() == "ring R = QQ[x]\n");
}

TEST_CASE("runtime errors name the offending command") {
    Session s;
    // hs over QQ is fine, but order-0 ... use a scheme whose relations are
    // not preserved: caught at run time, not parse time
    s.load(
        "ring R = QQ[x, y]\n"
        "der d on R : x -> 1, y -> 0\n"
        "scheme X = (R, <x^2>, d)\n");
    RunResult r = s.run();
    CHECK(r.exit_code == 1);
    CHECK(r.text.find("error: command 3 'scheme X = (R, <x^2>, d)':") != std::string::npos);
}

TEST_CASE("empty and comment-only sessions") {
    Session s;
    s.load("");
    CHECK(s.print().empty());
    CHECK(s.run().exit_code == 0);
    CHECK(s.run().text.empty());
    s.load("# nothing here\n\n   \n# still nothing\n");
    CHECK(s.print().empty());
    CHECK(s.run().exit_code == 0);
}

TEST_CASE("json report mirrors the text report") {
    Session s;
    s.load(
        "ring R = QQ[x, y]\n"
        "der d on R : x -> -2*y, y -> 3*x^2\n"
        "ideal H = <x^3 + y^2 - 1>\n"
        "ideal B = <x>\n"
        "is_differential H d\n"
        "is_differential B d\n");
    RunOptions opt;
    opt.json = true;
    RunResult r = s.run(opt);
    CHECK(r.exit_code == 1);
    auto doc = nlohmann::json::parse(r.text);
    CHECK(doc["ok"] == false);
    REQUIRE(doc["results"].size() == 2);
    CHECK(doc["results"][0]["name"] == "is_differential H d");
    CHECK(doc["results"][0]["value"] == "true");
    CHECK(doc["results"][0]["failed"] == false);
    CHECK(doc["results"][1]["value"] == "false");
    CHECK(doc["results"][1]["failed"] == true);
    CHECK_FALSE(doc.contains("error"));
}

TEST_CASE("cli: exit codes and determinism") {
    auto good = write_temp("good",
                           "ring R = QQ[x, y]\n"
                           "der d on R : x -> -2*y, y -> 3*x^2\n"
                           "ideal H = <x^3 + y^2 - 1>\n"
                           "is_differential H d\n");
    auto failing = write_temp("fail",
                              "ring R = QQ[x]\n"
                              "der d on R : x -> 1\n"
                              "ideal Z = <x>\n"
                              "is_differential Z d\n");
    auto broken = write_temp("broken", "ideal P = <x - >\n");

    CliResult ok = run_cli("\"" + good.string() + "\"");
    CHECK(ok.code == 0);
    CHECK(ok.out == "is_differential H d: true\n");
    CliResult again = run_cli("\"" + good.string() + "\"");
    CHECK(again.out == ok.out);

    CliResult bad = run_cli("\"" + failing.string() + "\"");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("[FAILED]") != std::string::npos);

    CliResult parse = run_cli("\"" + broken.string() + "\" 2>/dev/null");
    CHECK(parse.code == 2);
    CHECK(parse.out.empty());

    CliResult missing = run_cli("\"/no/such/file.fol\" 2>/dev/null");
    CHECK(missing.code == 2);

    CliResult json = run_cli("--json \"" + good.string() + "\"");
    CHECK(json.code == 0);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["results"][0]["name"] == "is_differential H d");

    // stdin mode
    CliResult piped = run_cli("- < \"" + good.string() + "\"");
    CHECK(piped.code == 0);
    CHECK(piped.out == ok.out);

    std::filesystem::remove(good);
    std::filesystem::remove(failing);
    std::filesystem::remove(broken);
}

TEST_CASE("worked examples golden output") {
    auto base = std::filesystem::path(FOLIATE_SOURCE_DIR) / "docs";
    std::string script = slurp(base / "worked_examples.fol");
    std::string golden = slurp(base / "worked_examples.out");
    Session s;
    s.load(script);
    RunResult r = s.run();
    CHECK(r.exit_code == 0);
    CHECK(r.text == golden);
}
