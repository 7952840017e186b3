#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsw/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace qsw;
using json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("expand renders exact terms in all three formats") {
    RunResult text = cli({"expand", "theta[0,0](2t)", "--order", "5"});
    CHECK(text.code == 0);
    CHECK(text.out == "pi-degree: 0\n"
                      "valid-to: 5\n"
                      "q^0: 1\n"
                      "q^1: 2\n"
                      "q^4: 2\n");
    CHECK(text.err.empty());

    RunResult js = cli({"expand", "theta[0,0](2t)", "--order", "5", "--format", "json"});
    CHECK(js.code == 0);
    json j = json::parse(js.out);
    CHECK(j["pi_power"] == 0);
    CHECK(j["valid_to"]["num"] == 5);
    CHECK(j["valid_to"]["den"] == 1);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["exp"]["num"] == 0);
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["terms"][1]["exp"]["num"] == 1);
    CHECK(j["terms"][1]["coeff"] == "2");
    CHECK(j["terms"][2]["exp"]["num"] == 4);
    CHECK(j["terms"][2]["exp"]["den"] == 1);
    CHECK(j["terms"][2]["coeff"] == "2");

    RunResult csv = cli({"expand", "theta[0,0](2t)", "--order", "5", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "exponent,coefficient\n0,1\n1,2\n4,2\n");
}

TEST_CASE("expand accepts fractional orders and off-integer exponents") {
    RunResult r = cli({"expand", "eta(1t)", "--order", "25/24"});
    CHECK(r.code == 0);
    CHECK(r.out == "pi-degree: 0\n"
                   "valid-to: 25/24\n"
                   "q^1/24: 1\n");
}

TEST_CASE("expand reports the honest validity when division shrinks it") {
    RunResult r = cli({"expand", "1/eta(1t)", "--order", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "pi-degree: 0\n"
                   "valid-to: 3\n"
                   "q^-1/24: 1\n"
                   "q^23/24: 1\n"
                   "q^47/24: 2\n"
                   "q^71/24: 3\n");
}

TEST_CASE("expand usage errors exit with code 2") {
    CHECK(cli({"expand", "theta[0,0](2t)"}).code == 2);            // missing --order
    CHECK(cli({"expand", "theta[0,0](2t", "--order", "5"}).code == 2); // syntax error
    CHECK(contains(cli({"expand", "theta[0,0](2t", "--order", "5"}).err, "offset"));
    CHECK(cli({"expand", "2", "--order", "0"}).code == 2);         // order must be positive
    CHECK(cli({"expand", "2", "--order", "x"}).code == 2);         // not a rational
    CHECK(cli({"expand", "2", "--order", "5", "--format", "xml"}).code == 2);
    CHECK(cli({"expand", "2", "--order", "5", "--grid", "7"}).code == 2); // odd grid
    CHECK(cli({"expand", "1/(0*eta(1t))", "--order", "5"}).code == 2);    // engine error
}

TEST_CASE("verify reports single cases, with overrides raising the order") {
    RunResult one = cli({"verify", "--name", "four_squares"});
    CHECK(one.code == 0);
    CHECK(one.out == "[PASS] four_squares order=500\n1/1 passed\n");

    RunResult two = cli({"verify", "--name", "fk_lemma_00", "--name", "fk_lemma_10"});
    CHECK(two.code == 0);
    CHECK(two.out == "[PASS] fk_lemma_00 order=30\n[PASS] fk_lemma_10 order=30\n2/2 passed\n");

    RunResult raised = cli({"verify", "--name", "jacobi_derivative", "--order", "35"});
    CHECK(raised.code == 0);
    CHECK(raised.out == "[PASS] jacobi_derivative order=35\n1/1 passed\n");

    // An override below the default never lowers the certified order.
    RunResult low = cli({"verify", "--name", "jacobi_derivative", "--order", "5"});
    CHECK(low.code == 0);
    CHECK(low.out == "[PASS] jacobi_derivative order=30\n1/1 passed\n");
}

TEST_CASE("verify usage errors exit with code 2") {
    CHECK(cli({"verify"}).code == 2);
    CHECK(cli({"verify", "--all", "--name", "four_squares"}).code == 2);
    CHECK(cli({"verify", "--name", "no_such_case"}).code == 2);
    CHECK(contains(cli({"verify", "--name", "no_such_case"}).err, "unknown identity"));
    CHECK(cli({"verify", "--all", "--jobs", "0"}).code == 2);
}

TEST_CASE("the negative control fails with the exact first divergent exponent") {
    RunResult text = cli({"verify", "--negative-control"});
    CHECK(text.code == 1);
    CHECK(text.out == "[FAIL] negative_control order=30 diverges at 3: lhs = 32, rhs = 33\n"
                      "0/1 passed\n");

    RunResult js = cli({"verify", "--negative-control", "--format", "json"});
    CHECK(js.code == 1);
    json arr = json::parse(js.out);
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["name"] == "negative_control");
    CHECK(arr[0]["pass"] == false);
    CHECK(arr[0]["first_failure"]["exp_num"] == 3);
    CHECK(arr[0]["first_failure"]["exp_den"] == 1);
    CHECK(arr[0]["first_failure"]["lhs"] == "32");
    CHECK(arr[0]["first_failure"]["rhs"] == "33");

    RunResult csv = cli({"verify", "--negative-control", "--format", "csv"});
    CHECK(csv.code == 1);
    CHECK(csv.out == "name,order,pass,exponent,lhs,rhs\n"
                     "negative_control,30,false,3,32,33\n");

    // A passing case renders with an explicit null failure in JSON.
    json ok = json::parse(cli({"verify", "--name", "hex2", "--format", "json"}).out);
    CHECK(ok[0]["pass"] == true);
    CHECK(ok[0]["first_failure"].is_null());
    CHECK(ok[0]["order"]["num"] == 500);
}

TEST_CASE("verify --all is byte-identical across thread counts") {
    RunResult serial = cli({"verify", "--all"});
    RunResult parallel = cli({"verify", "--all", "--jobs", "4"});
    CHECK(serial.code == 0);
    CHECK(parallel.code == 0);
    CHECK(serial.out == parallel.out);
    CHECK(contains(serial.out, "55/55 passed"));
}

TEST_CASE("count tabulates brute force against the closed formula") {
    RunResult r = cli({"count", "--form", "s4", "--max", "10"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "n\tcount\tformula\tmatch\n"));
    CHECK(contains(r.out, "1\t8\t8\tok\n"));
    CHECK(contains(r.out, "10\t144\t144\tok\n"));
    CHECK(contains(r.out, "all 10 rows match\n"));

    RunResult t4 = cli({"count", "--form", "t4", "--max", "3"});
    CHECK(t4.code == 0);
    CHECK(contains(t4.out, "0\t16\t16\tok\n"));
    CHECK(contains(t4.out, "1\t64\t64\tok\n"));

    json rows = json::parse(cli({"count", "--form", "s4", "--max", "3", "--format", "json"}).out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["n"] == 1);
    CHECK(rows[0]["count"] == 8);
    CHECK(rows[0]["formula"] == 8);
    CHECK(rows[0]["match"] == true);

    CHECK(cli({"count", "--form", "nope", "--max", "5"}).code == 2);
    CHECK(contains(cli({"count", "--form", "nope", "--max", "5"}).err, "known forms"));
    CHECK(cli({"count", "--form", "s4", "--max", "0"}).code == 2);
}

TEST_CASE("convolution tabulates every registered theorem") {
    RunResult r = cli({"convolution", "--name", "conv_delta_eps", "--max", "12"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "n\tlhs\trhs\tmatch\n"));
    CHECK(contains(r.out, "6\t3\t3\tok\n"));
    CHECK(contains(r.out, "12\t3\t3\tok\n"));
    CHECK(contains(r.out, "all 11 rows match\n"));

    for (const char* name : {"conv_delta_delta", "conv_eps_eps", "conv_weighted_delta_delta",
                             "conv_weighted_delta_eps", "farkas_remark"}) {
        RunResult each = cli({"convolution", "--name", name, "--max", "20"});
        CHECK(each.code == 0);
        CHECK(contains(each.out, "rows match"));
    }

    CHECK(cli({"convolution", "--name", "nope", "--max", "5"}).code == 2);
}

TEST_CASE("fk prints the expansion and the vanishing verdict") {
    RunResult r = cli({"fk", "--k", "3", "--order", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "k: 3\n"
                   "pi-degree: 0\n"
                   "valid-to: 10\n"
                   "(zero)\n"
                   "verdict: vanishes identically below q^10\n");

    json j = json::parse(cli({"fk", "--k", "5", "--order", "8", "--format", "json"}).out);
    CHECK(j["k"] == 5);
    CHECK(j["vanishes"] == true);
    CHECK(j["terms"].empty());

    RunResult csv = cli({"fk", "--k", "3", "--order", "6", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "exponent,coefficient\nverdict,zero\n");

    CHECK(cli({"fk", "--k", "9", "--order", "5"}).code == 2);
    CHECK(cli({"fk", "--k", "3"}).code == 2); // --order required
}

TEST_CASE("selftest runs the generator cross-checks") {
    RunResult r = cli({"selftest"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[PASS] triple_product[0,0]\n"));
    CHECK(contains(r.out, "[PASS] heat[1,1/2]\n"));
    CHECK(contains(r.out, "[PASS] derivative_product\n"));
    CHECK(contains(r.out, "23/23 passed\n"));

    json arr = json::parse(cli({"selftest", "--format", "json"}).out);
    CHECK(arr.size() == 23);
    for (const auto& item : arr) CHECK(item["pass"] == true);
}

TEST_CASE("--out writes the report to a file and keeps stdout quiet") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "qsw_cli_out_test.txt";
    RunResult direct = cli({"expand", "theta[0,0](2t)", "--order", "5"});
    RunResult filed =
        cli({"expand", "theta[0,0](2t)", "--order", "5", "--out", path.string()});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    std::remove(path.string().c_str());
}

TEST_CASE("top-level usage: help exits 0, junk exits 2") {
    RunResult help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "expand"));
    CHECK(contains(help.out, "verify"));
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
}
