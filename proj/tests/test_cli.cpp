// End-to-end tests of the command-line tool: output contracts, exit codes,
// determinism of the structured format.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef QDT_CLI_PATH
#error "QDT_CLI_PATH must be defined"
#endif
#ifndef QDT_DATA_DIR
#error "QDT_DATA_DIR must be defined"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QDT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string fan(const std::string& name) { return std::string(QDT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check passes the octant fan and its blowups") {
    for (const char* name : {"p1cubed.fan", "p1cubed_bl1.fan", "p1cubed_bl12.fan",
                             "p1cubed_bl123.fan"}) {
        RunResult r = run("check " + fan(name));
        CHECK(r.status == 0);
        CHECK(r.out.find("PASS") != std::string::npos);
    }
}

TEST_CASE("check fails the p3 fan on central symmetry") {
    RunResult r = run("check " + fan("p3.fan") + " --format structured");
    CHECK(r.status == 1);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["pass"] == false);
    bool symmetry_failed = false;
    for (const auto& c : doc["validation"])
        if (c["name"] == "central_symmetry" && c["pass"] == false) symmetry_failed = true;
    CHECK(symmetry_failed);
}

TEST_CASE("check fails the skew fan naming a cone") {
    RunResult r = run("check " + fan("skew_violator.fan") + " --format structured");
    CHECK(r.status == 1);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["orientation"]["pass"] == false);
    CHECK(doc["orientation"].contains("cone"));
}

TEST_CASE("malformed file gives exit 3") {
    std::string path = "/tmp/qdt_cli_malformed.fan";
    std::ofstream(path) << "{ rays: oops";
    RunResult r = run("check " + path);
    CHECK(r.status == 3);
}

TEST_CASE("invariants table ends with the q^8 value") {
    RunResult r = run("invariants " + fan("p1cubed.fan") + " --max-order 8 --auto");
    CHECK(r.status == 0);
    CHECK(r.out.find("8 -> -98") != std::string::npos);
}

TEST_CASE("invariants structured output is deterministic and complete") {
    std::string args = "invariants " + fan("p1cubed.fan") + " --max-order 8 --format structured";
    RunResult a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);  // byte-identical
    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["series"] ==
          nlohmann::json({"1", "0", "-8", "0", "12", "0", "48", "0", "-98"}));
    CHECK(doc["exponent"] == "-8");
    CHECK(doc["bott_c3"] == "-16");
    CHECK(doc["manifest"]["command"] == "invariants");
    CHECK(doc["manifest"].contains("fan_digest"));
}

TEST_CASE("explicit degenerate weights give exit 2 with a structured error") {
    RunResult r = run("invariants " + fan("p1cubed.fan") + " --weights 1 1 1");
    CHECK(r.status == 2);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["error"] == "degenerate_weights");
    CHECK(doc.contains("cone"));
    CHECK(doc.contains("partition"));
}

TEST_CASE("vertex command") {
    // q^4 coefficient: gamma(gamma-5)/2 with gamma = 64/5, cross-checked
    // against the direct Euler-ratio sum over the three 2-box partitions
    RunResult r = run("vertex --weights -2 -6 -10 --max-order 4 --format structured");
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["series"] == nlohmann::json({"1", "0", "-64/5", "0", "1248/25"}));

    // classical measure at the same weights through order 2
    RunResult c = run("vertex --weights -2 -6 -10 --max-order 2 --classical --format structured");
    CHECK(c.status == 0);
    auto cdoc = nlohmann::json::parse(c.out);
    CHECK(cdoc["series"][1] == "64/5");

    // inadmissible parity without --classical
    RunResult bad = run("vertex --weights -2 -6 -8 --max-order 4");
    CHECK(bad.status == 1);
}

TEST_CASE("blowup command chains") {
    std::string out1 = "/tmp/qdt_cli_bl1.fan";
    std::string out2 = "/tmp/qdt_cli_bl2.fan";
    RunResult r1 = run("blowup " + fan("p1cubed.fan") + " --cone-orbit 3 --out " + out1);
    CHECK(r1.status == 0);
    RunResult chk = run("check " + out1);
    CHECK(chk.status == 0);

    RunResult r2 = run("blowup " + out1 + " --cone-orbit 1 --out " + out2);
    CHECK(r2.status == 0);
    auto doc = nlohmann::json::parse(std::ifstream(out2));
    CHECK(doc["rays"].size() == 10);
    CHECK(doc["cones"].size() == 16);

    RunResult bad = run("blowup " + fan("p1cubed.fan") + " --cone-orbit 42 --out /tmp/x.fan");
    CHECK(bad.status == 1);
}

TEST_CASE("oracle command matches the series") {
    RunResult r = run("oracle " + fan("p1cubed.fan") + " --n 2 --format structured");
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["oracle"] == "-8");
    CHECK(doc["match"] == true);

    RunResult odd = run("oracle " + fan("p1cubed.fan") + " --n 3 --format structured");
    auto odoc = nlohmann::json::parse(odd.out);
    CHECK(odoc["oracle"] == "0");
    CHECK(odoc["match"] == true);

    RunResult four = run("oracle " + fan("p1cubed.fan") + " --n 4 --format structured");
    auto fdoc = nlohmann::json::parse(four.out);
    CHECK(fdoc["oracle"] == "12");
    CHECK(fdoc["match"] == true);
}
