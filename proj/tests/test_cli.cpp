#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "simcore");
    std::ostringstream out;
    std::ostringstream err;
    const int status = simcore::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("series") {
    const auto r = run({"series", "--gf", "psi", "-s", "2", "-t", "3", "-N", "5"});
    CHECK(r.status == 0);
    CHECK(r.out == "n,coefficient\n0,1\n1,1\n2,0\n3,0\n4,0\n5,0\n");
    const auto j = nlohmann::json::parse(run({"series", "--gf", "core", "-t", "2", "-N", "3", "--format", "json"}).out);
    CHECK(j["coefficients"] == nlohmann::json::array({1, 1, 0, 1}));
    CHECK(run({"series", "--gf", "psi-star", "-s", "5", "-t", "7", "-N", "3"}).status == 0);
}

TEST_CASE("bijections") {
    CHECK(run({"bijection", "--map", "gamma", "-s", "7", "-t", "11", "--input", "[3,3,3]"}).out ==
          "{\"kind\":\"bar\",\"parts\":[6]}\n");
    CHECK(run({"bijection", "--map", "gamma-inv", "-s", "7", "-t", "11", "--input", "{\"kind\":\"bar\",\"parts\":[6]}"})
              .out == "[3,3,3]\n");
    CHECK(run({"bijection", "--map", "zeta", "-t", "3", "--input", "[4,2,1,1]"}).out ==
          "{\"kind\":\"bar\",\"parts\":[4,1]}\n");
    CHECK(run({"bijection", "--map", "Gamma", "-s", "21", "-t", "33", "--input",
               "[21,20,12,12,12,12,11,11,10,9,8,6,2,2,2,2,2,2,2,2,1]"})
              .out == "{\"kind\":\"bar\",\"parts\":[20,19,18,10,8,7,4]}\n");
    CHECK(run({"bijection", "--map", "gks", "-t", "3", "--input", "[4,2,1,1]"}).out ==
          "{\"t\":3,\"entries\":[2,0,-2]}\n");
    CHECK(run({"bijection", "--map", "bar-quotient", "-g", "3", "--input", "[20,19,18,10,8,7,4]"}).out ==
          "{\"kind\":\"bar\",\"g\":3,\"core\":[4,1],\"quotient\":[[6],[5,3,3,3,2,2,1,1,1]],\"weight\":27}\n");
    CHECK(run({"bijection", "--map", "dh-core", "-s", "7", "-t", "11", "--input", "\"RURRRUUR\""}).out == "[3,3,3]\n");
}

TEST_CASE("scan, grid and count") {
    const auto scan = run({"scan", "--gf", "barcore", "-t", "5", "--mod", "2", "-g", "5", "-N", "60"});
    CHECK(scan.out == "{\"modulus\":2,\"g\":5,\"residues\":[3,4],\"verified_to\":60}\n");
    CHECK(run({"grid", "--kind", "dh", "-s", "3", "-t", "5"}).out == "7,1\n");
    CHECK(run({"count", "--quantity", "cores", "-t", "2", "-N", "3"}).out == "n,count\n0,1\n1,1\n2,0\n3,1\n");
    CHECK(run({"count", "--quantity", "extremal", "-s", "5", "-t", "7"}).out == "total_count,max_size\n66,48\n");
}

TEST_CASE("invalid parameters fail with a diagnostic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"series", "--gf", "barcore", "-t", "4"},
             {"grid", "--kind", "anderson", "-s", "4", "-t", "6"},
             {"bijection", "--map", "gamma", "-s", "7", "-t", "11", "--input", "[3,1]"},
             {"bijection", "--map", "zeta", "-t", "3", "--input", "not json"},
             {"count", "--quantity", "cores"},
             {"series", "--gf", "nonsense"},
             {}}) {
        const auto r = run(args);
        CHECK(r.status != 0);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"count", "--quantity", "stbar-cores", "-s", "5", "-t", "7", "-N", "20",
                                        "--format", "json"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("truncation from the environment and file output") {
    ::setenv(simcore::kTruncationEnv, "4", 1);
    CHECK(run({"series", "--gf", "partition"}).out == "n,coefficient\n0,1\n1,1\n2,2\n3,3\n4,5\n");
    ::setenv(simcore::kTruncationEnv, "abc", 1);
    CHECK(run({"series", "--gf", "partition"}).status != 0);
    ::unsetenv(simcore::kTruncationEnv);

    const auto path = std::filesystem::temp_directory_path() / "simcore_cli_test.csv";
    CHECK(run({"grid", "--kind", "yinyang", "-s", "3", "-t", "5", "-o", path.string()}).out.empty());
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == "2,-1\n");
    std::filesystem::remove(path);
}

TEST_CASE("verify") {
    const auto r = run({"verify", "partitions", "-N", "20"});
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("suites passed: 1/1") != std::string::npos);
}
