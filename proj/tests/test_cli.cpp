#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopeforge/numtheory.hpp"
#include "slopeforge/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <tuple>

using slopeforge::Rat;
using slopeforge::parse_rational;
using json = nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the built binary; captures stdout. Stderr passes through unless the
// caller appends its own redirection.
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SLOPEFORGE_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    CliResult result;
    result.out = out;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("plain single values") {
    CHECK(run_cli("cqp 1 5").out == "17/5\n");
    CHECK(run_cli("cqp 1 5").exit_code == 0);
    CHECK(run_cli("hj 12 5").out == "3 2 3\n");
    CHECK(run_cli("dedekind 3 8").out == "1/16\n");
    CHECK(run_cli("dedekind 7 10").out == "0\n");
}

TEST_CASE("exit codes") {
    CHECK(run_cli("cqp 2 4 2>/dev/null").exit_code == 1);            // not coprime
    CHECK(run_cli("ru --p 6 --alpha 1 --beta 1 --d 2 2>/dev/null").exit_code == 1);
    CHECK(run_cli("seek --r 3 --tol 1e-3 2>/dev/null").exit_code == 1);  // boundary
    CHECK(run_cli("bogus 2>/dev/null").exit_code == 1);               // unknown subcommand
    CHECK(run_cli("cqp 1 5 --format xml 2>/dev/null").exit_code == 1);
    CHECK(run_cli("bounds --pmax 50 >/dev/null").exit_code == 0);
    CHECK(run_cli("cqp 1 5 --out /nonexistent-dir/x 2>/dev/null").exit_code == 3);
}

TEST_CASE("json round trip") {
    const CliResult ru = run_cli("ru --p 5 --alpha 1 --beta 1 --d 2 --format json");
    REQUIRE(ru.exit_code == 0);
    const json j = json::parse(ru.out);
    CHECK(j["tool"] == "slopeforge");
    CHECK(j["version"].is_string());
    CHECK(j["p"] == 5);
    CHECK(j["c2"] == "587731");
    CHECK(j["residual_omitted"] == true);
    CHECK(parse_rational(j["c1sq_partial"].get<std::string>()) == Rat(3442581, 5));
    CHECK(parse_rational(j["slope"].get<std::string>()) == Rat(3442581, 5) / 587731);

    const json d = json::parse(run_cli("dedekind 5 12 --format json").out);
    CHECK(parse_rational(d["s"].get<std::string>()) ==
          slopeforge::numtheory::dedekind_sum(5, 12));

    const json cert = json::parse(run_cli("seek --r 2 --tol 1e-3 --format json").out);
    CHECK(cert["alpha"] == "68");
    CHECK(cert["beta"] == "29");
    CHECK(parse_rational(cert["asymptotic_error"].get<std::string>()) <=
          Rat(1, 1000));

    const json b = json::parse(run_cli("bounds --pmax 5 --format json").out);
    CHECK(b["ok"] == true);
    CHECK(b["schemes_checked"] == 13);
    CHECK(b["min_slack"] == "12/5");
}

TEST_CASE("csv shape and headers") {
    const CliResult csv = run_cli("bounds --pmax 5 --format csv");
    REQUIRE(csv.exit_code == 0);
    std::istringstream lines(csv.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "# slopeforge 1.0.0");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "p,a,b,c,m,S,L,C,six_S_plus_L,bound,slack,limit_slope");
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 13);

    const CliResult no_header = run_cli("bounds --pmax 5 --format csv --no-header");
    CHECK(no_header.out.rfind("p,a,b,c,m,", 0) == 0);

    // First data row is the pinned extremal scheme.
    const std::string expect = "5,1,1,2,1,-3/5,18,54/5,72/5,84/5,12/5,41/40";
    CHECK(no_header.out.find(expect) != std::string::npos);
}

TEST_CASE("determinism: byte-identical reruns") {
    const std::string args = "density --grid 2 --primes 20 --format csv";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());

    const CliResult j1 = run_cli("seek --r 7/4 --format json");
    const CliResult j2 = run_cli("seek --r 7/4 --format json");
    CHECK(j1.out == j2.out);
}

TEST_CASE("density output is ordered and in range") {
    const CliResult res = run_cli("density --grid 2 --primes 11 --format json 2>/dev/null");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    REQUIRE(j["rows"].is_array());
    CHECK(j["rows"].size() == 12);  // 4 pairs x primes {5,7,11}
    std::tuple<std::int64_t, std::int64_t, std::int64_t> prev{-1, -1, -1};
    for (const auto& row : j["rows"]) {
        std::tuple<std::int64_t, std::int64_t, std::int64_t> key{
            row["alpha"].get<std::int64_t>(), row["beta"].get<std::int64_t>(),
            row["p"].get<std::int64_t>()};
        CHECK(prev < key);
        prev = key;
        const Rat lambda = parse_rational(row["lambda"].get<std::string>());
        CHECK(lambda > 1);
        CHECK(lambda < 3);
    }
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string path = "/tmp/slopeforge_cli_test_out.csv";
    std::remove(path.c_str());
    const CliResult direct = run_cli("lemma --pmax 20 --format csv");
    const CliResult to_file = run_cli("lemma --pmax 20 --format csv --out " + path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("product subcommand") {
    const json j = json::parse(
        run_cli("product --x-invariants 0,24,2,2,0 --y-invariants 0,24,2,2,0 --format json").out);
    CHECK(j["c1sq"] == "96/1");
    CHECK(j["c2"] == "168/1");
    CHECK(j["chi"] == "22/1");
    CHECK(j["coupling"] == "14/1");
    CHECK(j["warnings"].empty());

    const json warned = json::parse(
        run_cli("product --x-invariants 1,24,2,2,0 --y-invariants 0,24,2,0,0 --format json").out);
    CHECK(warned["warnings"].size() == 2);

    CHECK(run_cli("product --x-invariants 1,2,3 --y-invariants 0,24,2,2,0 2>/dev/null")
              .exit_code == 1);
}

TEST_CASE("--approx adds decimal companions") {
    const json j = json::parse(run_cli("cqp 1 5 --format json --approx").out);
    CHECK(j["c_approx"].is_number());
    CHECK(j["c_approx"].get<double>() == doctest::Approx(3.4));

    const CliResult plain = run_cli("cqp 1 5 --approx");
    std::istringstream tokens(plain.out);
    std::string exact, approx;
    tokens >> exact >> approx;
    CHECK(exact == "17/5");
    CHECK(std::stod(approx) == doctest::Approx(3.4));
}

TEST_CASE("--version and --help") {
    const CliResult v = run_cli("--version");
    CHECK(v.exit_code == 0);
    CHECK(v.out == "slopeforge 1.0.0\n");
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("seek --help").exit_code == 0);
}
