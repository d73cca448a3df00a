// Integration tests driving the machin-refine binary. The executable
// path arrives via the MACHIN_CLI environment variable (set by ctest).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("MACHIN_CLI");
    REQUIRE_MESSAGE(p != nullptr, "MACHIN_CLI must point at the binary");
    return p;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + " \"" + cli_path() + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) {
        out.append(buf, got);
    }
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp_path(const std::string& name) {
    return "/tmp/machin_cli_test_" + std::to_string(getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("refine emits the golden approximations as JSON lines") {
    RunResult r = run("refine --u0 1/2 --u1 1/3 --a0 1 --a1 1 --depth 4 --format json");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);

    std::vector<std::string> expected_r{"10/3", "68/21", "1748/553",
                                        "216791924/68976559"};
    for (std::size_t i = 0; i < 4; ++i) {
        nlohmann::json j = nlohmann::json::parse(lines[i]);
        CHECK(j.at("n") == static_cast<long>(i));
        CHECK(j.at("r") == expected_r[i]);
    }
    // schema-stable key order
    CHECK(lines[0].rfind("{\"n\":0,\"q\":", 0) == 0);
}

TEST_CASE("refine with depth 1 exposes the first derived coefficient") {
    RunResult r = run("refine --depth 1 --format json");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);
    nlohmann::json j = nlohmann::json::parse(lines[0]);
    CHECK(j.at("q") == "1");
    CHECK(j.at("a_next") == "2");  // a_{-1} = q0 a0 + a1
    CHECK(j.at("r_decimal") == "3.333333333333");
}

TEST_CASE("refine output is deterministic and CSV matches the schema") {
    RunResult a = run("refine --depth 5 --format json");
    RunResult b = run("refine --depth 5 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult csv = run("refine --depth 4 --format csv");
    std::vector<std::string> lines = lines_of(csv.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] ==
          "n,q,u_n,u_next,a_n,a_prev,a_next,N,D,fib,r,r_decimal,err_lo,err_hi");
    CHECK(lines[1].rfind("0,1,1/2,1/3,1,1,2,1,1,1,10/3,3.333333333333,", 0) == 0);

    RunResult table = run("refine --depth 3");
    CHECK(table.exit_code == 0);
    CHECK(!table.out.empty());
}

TEST_CASE("refine rejects invalid seeds with exit 2") {
    CHECK(run("refine --u0 1/3 --u1 1/2 --depth 2").exit_code == 2);
    CHECK(run("refine --u0 1/2 --u1 1/4 --depth 2").exit_code == 2);
    CHECK(run("refine --u0 garbage --depth 2").exit_code == 2);
    CHECK(run("refine --eps 0 --depth 2").exit_code == 2);
    CHECK(run("refine --depth 0").exit_code == 2);
}

TEST_CASE("degenerate ratio exits 3 (behind the debug bypass)") {
    RunResult r =
        run("refine --u0 3/4 --u1 1/3 --unsafe-skip-seed-verification --depth 2");
    CHECK(r.exit_code == 3);
}

TEST_CASE("verify exit codes and certificate summary") {
    RunResult good = run("verify \"4*atan(1/5) - 1*atan(1/239) = pi/4\"");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("verified") != std::string::npos);
    CHECK(good.out.find("angle enclosure") != std::string::npos);

    RunResult simson =
        run("verify \"8*atan(1/10) - 1*atan(1/239) - 4*atan(1/515) = pi/4\"");
    CHECK(simson.exit_code == 0);

    RunResult bad = run("verify \"1*atan(1/2) + 1*atan(1/4) = pi/4\"");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("refuted") != std::string::npos);

    RunResult branchy = run("verify \"5*atan(1/2) + 5*atan(1/3) = pi/4\"");
    CHECK(branchy.exit_code == 1);

    RunResult unparsable = run("verify \"4*atan(1/5\"");
    CHECK(unparsable.exit_code == 5);
    CHECK(unparsable.out.find("position") != std::string::npos);
}

TEST_CASE("digits subcommand") {
    RunResult ten = run("digits --n 2 --digits 10");
    CHECK(ten.exit_code == 0);
    CHECK(lines_of(ten.out)[0] == "3.1415926535");

    RunResult one = run("digits --n 1 --digits 1");
    CHECK(one.exit_code == 0);
    CHECK(lines_of(one.out)[0] == "3.1");

    RunResult guard = run("digits --n 0 --digits 5");
    CHECK(guard.exit_code == 2);

    RunResult stats = run("digits --n 2 --digits 30 --stats");
    CHECK(stats.exit_code == 0);
    std::vector<std::string> lines = lines_of(stats.out);
    REQUIRE(lines.size() >= 3);
    CHECK(lines[0].rfind("3.14159265358979323846", 0) == 0);
    CHECK(lines[1].find("series_terms=") != std::string::npos);
}

TEST_CASE("precision cap from the environment exits 4") {
    RunResult r = run("digits --n 2 --digits 100",
                      "MACHIN_REFINE_MAX_PRECISION_BITS=10");
    CHECK(r.exit_code == 4);
}

TEST_CASE("config file applies below flags") {
    std::string cfg = tmp_path("config");
    {
        std::ofstream f(cfg);
        f << "depth=2\nformat=json\nu0=1/2\nu1=1/3\n";
    }
    RunResult from_cfg = run("refine --config " + cfg);
    CHECK(from_cfg.exit_code == 0);
    CHECK(lines_of(from_cfg.out).size() == 2);

    RunResult overridden = run("refine --config " + cfg + " --depth 1");
    CHECK(overridden.exit_code == 0);
    CHECK(lines_of(overridden.out).size() == 1);

    // digits shares the seed keys and ignores refine-only ones
    RunResult dig = run("digits --n 2 --digits 10 --config " + cfg);
    CHECK(dig.exit_code == 0);
    CHECK(lines_of(dig.out)[0] == "3.1415926535");

    RunResult empty_cfg = run("refine --config /dev/null --depth 1");
    CHECK(empty_cfg.exit_code == 0);

    std::string bad = tmp_path("badcfg");
    {
        std::ofstream f(bad);
        f << "depth=abc\n";
    }
    CHECK(run("refine --config " + bad).exit_code == 2);
    {
        std::ofstream f(bad);
        f << "unknown_key=1\n";
    }
    CHECK(run("refine --config " + bad).exit_code == 2);
    std::remove(bad.c_str());
    std::remove(cfg.c_str());
}

TEST_CASE("ledger writing and resume") {
    std::string ledger = tmp_path("ledger");
    std::string full = tmp_path("full");

    RunResult first = run("refine --depth 3 --format json --out " + ledger);
    CHECK(first.exit_code == 0);
    REQUIRE(lines_of(slurp(ledger)).size() == 4);  // header + 3 records

    RunResult resumed =
        run("refine --resume " + ledger + " --depth 6 --format json");
    CHECK(resumed.exit_code == 0);
    CHECK(lines_of(resumed.out).size() == 3);  // only the extension

    RunResult fresh = run("refine --depth 6 --format json --out " + full);
    CHECK(fresh.exit_code == 0);
    CHECK(slurp(ledger) == slurp(full));  // resumed file equals a fresh run

    // resuming at or below the stored depth is a no-op
    RunResult noop = run("refine --resume " + ledger + " --depth 4 --format json");
    CHECK(noop.exit_code == 0);
    CHECK(lines_of(noop.out).empty());
    CHECK(lines_of(slurp(ledger)).size() == 7);  // header + 6 records

    // resuming a tampered ledger is refused
    {
        std::ofstream f(ledger, std::ios::app);
        f << "{\"n\":6,\"q\":\"1\",\"u_n\":\"1/5\",\"u_next\":\"1/7\",\"a_n\":"
             "\"3\",\"a_prev\":\"2\",\"a_next\":\"5\",\"N\":\"1\",\"D\":\"1\","
             "\"fib\":\"1\",\"r\":\"3\",\"r_decimal\":\"3\",\"err_lo\":\"0\","
             "\"err_hi\":\"0\"}\n";
    }
    RunResult tampered = run("refine --resume " + ledger + " --depth 8");
    CHECK(tampered.exit_code == 2);

    std::remove(ledger.c_str());
    std::remove(full.c_str());
}
