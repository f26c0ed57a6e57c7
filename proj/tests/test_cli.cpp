// Exercises the installed command surface end to end: spawns the gkit
// binary (path in GKIT_BIN), checks exit codes and output shapes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("GKIT_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json first_json_line(const std::string& out) {
    const auto eol = out.find('\n');
    return json::parse(out.substr(0, eol));
}

} // namespace

TEST_CASE("check accepts a cycle complement over both fields") {
    const RunResult r = run("check --builtin cbar5 --fields q,f2 --format json");
    CHECK(r.exit_code == 0);
    const json out = first_json_line(r.out);
    CHECK(out["graph"]["alpha"] == 2);
    REQUIRE(out["results"].size() == 2);
    for (const auto& entry : out["results"]) CHECK(entry["theorem"]["accepted"] == true);
}

TEST_CASE("check with both routes reports agreement") {
    const RunResult r = run("check --builtin fig1c --route both --fields q,f2,f3 --format json");
    CHECK(r.exit_code == 0);
    const json out = first_json_line(r.out);
    CHECK(out["all_agree"] == true);
    for (const auto& entry : out["results"]) {
        CHECK(entry["theorem"]["accepted"] == true);
        CHECK(entry["homological"]["accepted"] == true);
        CHECK(entry["agree"] == true);
    }
}

TEST_CASE("check by graph6 string") {
    const RunResult r = run("check --graph6 C~ --fields q --format json"); // K4
    CHECK(r.exit_code == 0);
    const json out = first_json_line(r.out);
    CHECK(out["results"][0]["theorem"]["accepted"] == false);

    // literal code for the 5-cycle complement
    const RunResult c = run("check --graph6 DUW --fields q,f2 --format json");
    CHECK(c.exit_code == 0);
    const json cj = first_json_line(c.out);
    REQUIRE(cj["results"].size() == 2);
    for (const auto& entry : cj["results"]) CHECK(entry["theorem"]["accepted"] == true);
}

TEST_CASE("GKIT_FIELDS supplies the default field list") {
    const RunResult r = run("check --builtin cbar4 --format json", "GKIT_FIELDS=f3");
    CHECK(r.exit_code == 0);
    const json out = first_json_line(r.out);
    REQUIRE(out["results"].size() == 1);
    CHECK(out["results"][0]["field"] == "f3");
}

TEST_CASE("malformed input exits 2") {
    const std::string path = "/tmp/gkit_cli_bad_edges.txt";
    std::ofstream(path) << "n 4\n1 1\n";
    CHECK(run("check --edges " + path).exit_code == 2);
    CHECK(run("check --graph6 'D'").exit_code == 2);
    CHECK(run("check --builtin nosuch").exit_code == 2);
    CHECK(run("check").exit_code == 2);
    CHECK(run("enumerate --n 4..44").exit_code == 2);
}

TEST_CASE("fault injection trips the route-disagreement exit code") {
    const RunResult r = run("check --builtin cbar5 --route both --fields q --format json",
                            "GKIT_FAULT=negate-homological");
    CHECK(r.exit_code == 3);
    const json out = first_json_line(r.out);
    CHECK(out["all_agree"] == false);
}

TEST_CASE("report emits the expected invariants") {
    const RunResult a = run("report --builtin fig1a --fields q --format text");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("I(x)=1+6x+12x^2+8x^3") != std::string::npos);

    const RunResult b = run("report --builtin cbar6 --fields q --format text");
    CHECK(b.out.find("I(x)=1+6x+6x^2") != std::string::npos);

    const RunResult c = run("report --builtin fig1c --fields f2 --format json");
    const json out = first_json_line(c.out);
    CHECK(out["graph"]["m"] == 10);
    CHECK(out["well_covered"] == true);
    CHECK(out["w2"] == true);
    CHECK(out["euler"] == true);
    CHECK(out["h_vector"][1] == "5");
}

TEST_CASE("check on a facet file runs the homological route") {
    const std::string path = "/tmp/gkit_cli_rp2.txt";
    std::ofstream(path) << "0 1 2\n0 1 3\n0 2 4\n0 3 5\n0 4 5\n1 2 5\n1 3 4\n1 4 5\n2 3 4\n2 3 5\n";
    const RunResult r = run("check --facets " + path + " --fields q,f2 --format json");
    CHECK(r.exit_code == 0);
    const json out = first_json_line(r.out);
    CHECK(out["route"] == "homological");
    REQUIRE(out["results"].size() == 2);
    CHECK(out["results"][0]["field"] == "q");
    CHECK(out["results"][0]["cohen_macaulay"]["accepted"] == true);
    CHECK(out["results"][1]["field"] == "f2");
    CHECK(out["results"][1]["cohen_macaulay"]["accepted"] == false);
}

TEST_CASE("report on a facet file") {
    const std::string path = "/tmp/gkit_cli_facets.txt";
    std::ofstream(path) << "0 1\n1 2\n2 3\n3 0\n";
    const RunResult r = run("report --facets " + path + " --fields q,f2 --format json");
    CHECK(r.exit_code == 0);
    const json out = first_json_line(r.out);
    CHECK(out["complex"]["dim"] == 1);
    CHECK(out["euler"] == true);
    CHECK(out["betti"][0]["values"][2] == 1);
}

TEST_CASE("enumerate emits deterministic JSON lines") {
    const RunResult r = run("enumerate --n 4");
    CHECK(r.exit_code == 0);
    int lines = 0;
    std::size_t pos = 0;
    while ((pos = r.out.find('\n', pos)) != std::string::npos) { ++lines; ++pos; }
    CHECK(lines == 11);

    const RunResult again = run("enumerate --n 4");
    CHECK(again.out == r.out);
    const RunResult parallel = run("enumerate --n 4 --jobs 3");
    CHECK(parallel.out == r.out);

    const json first = first_json_line(r.out);
    CHECK(first.contains("graph6"));
    CHECK(first.contains("canonical"));
    CHECK(first.contains("alpha"));
    CHECK(first.contains("m"));
    CHECK(first.contains("verdicts"));
}

TEST_CASE("enumerate sweeps match the classifications") {
    const RunResult tf = run("enumerate --triangle-free --alpha 3 --no-isolated --n 6..8 --predicate w2");
    CHECK(tf.exit_code == 0);
    int lines = 0;
    std::size_t pos = 0;
    while ((pos = tf.out.find('\n', pos)) != std::string::npos) { ++lines; ++pos; }
    CHECK(lines == 3);

    const RunResult a2 = run("enumerate --alpha 2 --no-isolated --n 4..6 --predicate gorenstein:f2 --format text");
    CHECK(a2.exit_code == 0);
    int count = 0;
    pos = 0;
    while ((pos = a2.out.find('\n', pos)) != std::string::npos) { ++count; ++pos; }
    CHECK(count == 3); // exactly the three cycle complements
}
