#include <catch2/catch_amalgamated.hpp>

#include <metriclie/io.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using metriclie::io::json;

namespace {

const std::string kCli = METRICLIE_CLI_PATH;
const std::string kFixtures = METRICLIE_FIXTURES_DIR;

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

CommandResult run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string chomp(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

} // namespace

TEST_CASE("soliton report is byte-stable golden JSON") {
    const auto r = run("soliton --catalog h3:g1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(chomp(r.out) ==
          R"({"command":"soliton","input":{"catalog":"h3:g1"},"result":{"c":"3/2","D":["-2","0","0","0","-1","0","0","0","-1"],"class":"shrinking"},"unique":true})");
    const auto again = run("soliton --catalog h3:g1 --format json");
    CHECK(again.out == r.out);
}

TEST_CASE("einstein-solve with the soliton extension") {
    const auto r = run("einstein-solve --catalog h3:g1 --extend soliton");
    CHECK(r.exit_code == 0);
    CHECK(chomp(r.out) == "(h=-4, lambda=3/2)");

    const auto je = run("einstein-solve --catalog e2 --extend soliton --format json");
    CHECK(je.exit_code == 0);
    const json report = json::parse(je.out);
    CHECK(report["result"]["solutions"][0]["h"] == "-4");
    CHECK(report["result"]["solutions"][0]["lambda"] == "2");
}

TEST_CASE("absence of a soliton is a valid zero-exit answer") {
    for (const std::string id :
         {"oscillator:m=1,eps=1", "oscillator:m=1,eps=-1", "oscillator:m=1,eps=1/2"}) {
        const auto r = run("soliton --catalog " + id);
        CHECK(r.exit_code == 0);
        CHECK(chomp(r.out) == "none");
    }
}

TEST_CASE("ricci from a hand-written oscillator document") {
    const auto r =
        run("ricci --input " + kFixtures + "/oscillator_m1_eps0.json --format json");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    const auto& ric = report["result"]["ricci"];
    REQUIRE(ric.size() == 16);
    // Only Ric(Q, Q) = 1/2 is nonzero at eps = 0.
    for (std::size_t idx = 0; idx < 16; ++idx)
        CHECK(ric[idx] == (idx == 15 ? "1/2" : "0"));
}

TEST_CASE("extend emits a loadable document") {
    const std::string path = "/tmp/metriclie_cli_test_ext.json";
    const auto r = run("extend --catalog e11 --out " + path);
    REQUIRE(r.exit_code == 0);
    const auto solve = run("einstein-solve --input " + path);
    CHECK(solve.exit_code == 0);
    CHECK(chomp(solve.out) == "(h=-4, lambda=2)");
    const auto inst = run("ricci --input " + path + " --param h=-4 --format json");
    CHECK(inst.exit_code == 0);
    std::remove(path.c_str());
}

TEST_CASE("verify-all passes, is cited, and is byte-stable without the header") {
    const auto a = run("verify-all --no-header");
    const auto b = run("verify-all --no-header");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("FAIL") == std::string::npos);
    CHECK(a.out.find(" -- ") != std::string::npos); // citations attached
    const auto j = run("verify-all --format json");
    const json report = json::parse(j.out);
    CHECK(report["result"]["failed"] == 0);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run("soliton --catalog nope:n=1").exit_code == 2);
    CHECK(run("soliton --no-such-flag").exit_code == 2);
    CHECK(run("ricci").exit_code == 2); // no source given
    CHECK(run("ricci --input /nonexistent.json").exit_code == 2);

    const std::string bad = "/tmp/metriclie_cli_test_bad.json";
    {
        std::ofstream out(bad);
        out << R"({"name": "bad", "dim": 2, "brackets": [{"i": 0, "j": 1, "out": {"1": "1"}}],)"
            << R"( "metric": [["1","0"],["0","1"]]})";
    }
    CHECK(run("validate --input " + bad).exit_code == 2);
    std::remove(bad.c_str());
}

TEST_CASE("flow emits JSON lines and reports degeneration as exit 1") {
    const auto r = run("flow --catalog h3:g1 --t-end 0.01 --dt 0.001 --format json");
    REQUIRE(r.exit_code == 0);
    std::size_t lines = 0;
    std::istringstream in(r.out);
    std::string line;
    double last_t = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++lines;
        const json sample = json::parse(line);
        REQUIRE(sample.contains("t"));
        REQUIRE(sample.contains("g"));
        REQUIRE(sample.contains("residual"));
        CHECK(sample["g"].size() == 9);
        CHECK(sample["residual"].get<double>() < 1e-10);
        last_t = sample["t"].get<double>();
    }
    CHECK(lines == 11);
    CHECK(last_t == 0.01);

    // The E(2) direction g11 = 1 - 4t closes up at t = 1/4.
    const auto degenerate = run("flow --catalog e2 --t-end 0.5 --dt 0.001");
    CHECK(degenerate.exit_code == 1);
}

TEST_CASE("validate and catalog-list are informative") {
    const auto v = run("validate --catalog h3:g1");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("nilpotent") != std::string::npos);
    CHECK(v.out.find("(2, 1)") != std::string::npos);

    const auto l = run("catalog-list");
    CHECK(l.exit_code == 0);
    CHECK(l.out.find("h3:g1") != std::string::npos);
    CHECK(l.out.find("oscillator:m=1,eps=0") != std::string::npos);
}
