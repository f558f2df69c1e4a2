#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Run the CLI, capture stdout and the exact exit code.
RunResult run_cli(const std::string& args) {
    std::string out_path = std::string("cli_out_") + std::to_string(rand()) + ".tmp";
    std::string cmd = std::string(HOOKMOD_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    return {code, ss.str()};
}

const std::string kGolden = std::string(HOOKMOD_TEST_DIR) + "/golden/v1";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("selftest passes") {
    auto r = run_cli("selftest --seed 7");
    REQUIRE(r.exit_code == 0);
}

TEST_CASE("kostka output and determinism") {
    auto r1 = run_cli("kostka --n 2 --k 1");
    REQUIRE(r1.exit_code == 0);
    auto j = nlohmann::json::parse(r1.out);
    REQUIRE(j.at("table")[0].at("poly").at("str") == "q");
    auto r2 = run_cli("kostka --n 2 --k 1");
    REQUIRE(r1.out == r2.out);

    REQUIRE(run_cli("kostka --n 3 --k 2 --format text").exit_code == 0);
    REQUIRE(run_cli("kostka --n 3 --k 2 --format csv").exit_code == 0);
    REQUIRE(run_cli("kostka --n 3 --k 2 --format bogus").exit_code == 4);
}

TEST_CASE("hilbert methods agree through the CLI") {
    auto r = run_cli("hilbert --n 3 --k 2 --method all");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("agree") == true);
    REQUIRE(j.at("methods").at("derivatives").at("str") ==
            j.at("methods").at("stembridge").at("str"));

    REQUIRE(run_cli("hilbert --n 4 --k 2 --method fillings").exit_code == 0);
}

TEST_CASE("scale guards exit with code 2") {
    REQUIRE(run_cli("hilbert --n 20 --k 3").exit_code == 2);
    REQUIRE(run_cli("basis-check --n 9 --k 3 --basis descent").exit_code == 2);
    REQUIRE(run_cli("verify-axioms --n 6 --k 3").exit_code == 2);
}

TEST_CASE("straighten command") {
    auto r = run_cli("straighten --n 7 --k 5 --monomial \"x1^2 y2^4 x3^2 y5 x6^3\"");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("terms")[0].at("coef") == 1);
    REQUIRE(j.at("terms")[0].at("pi") == nlohmann::json::array({6, 1, 3, 4, 7, 5, 2}));
    REQUIRE(j.at("terms")[0].at("nu") == nlohmann::json::array({6, 6, 3, 3}));

    REQUIRE(run_cli("straighten --n 3 --k 2 --monomial \"z1\"").exit_code == 4);
    REQUIRE(run_cli("straighten --n 3 --k 2 --monomial \"x1 y1\"").exit_code == 4);
}

TEST_CASE("basis-check command") {
    REQUIRE(run_cli("basis-check --n 3 --k 2 --basis descent").exit_code == 0);
    REQUIRE(run_cli("basis-check --n 3 --k 2 --basis artin").exit_code == 0);
    REQUIRE(run_cli("basis-check --n 3 --k 2 --basis kicking:descent,artin").exit_code == 0);
    REQUIRE(run_cli("basis-check --n 3 --k 2 --basis bogus").exit_code == 4);
}

TEST_CASE("decompose matches the golden bytes") {
    auto r = run_cli("decompose --n 4 --k 3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == read_file(kGolden + "/decompose_n4k3.json"));
}

TEST_CASE("verify-axioms command") {
    auto r = run_cli("verify-axioms --n 2 --k 1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("A1") == true);
    REQUIRE(j.at("A3") == true);
}

TEST_CASE("action command") {
    auto r = run_cli("action --n 4 --k 3 --lambda \"2,1|1\"");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("A_lambda") == nlohmann::json::array({1, 2, 3}));
    REQUIRE(j.at("dim") == 1);

    REQUIRE(run_cli("action --n 4 --k 3 --lambda \"3,1|1\"").exit_code == 4);
    REQUIRE(run_cli("action --n 4 --k 3 --lambda \"no-bar\"").exit_code == 4);
}

TEST_CASE("bad invocations exit with the parse code") {
    REQUIRE(run_cli("").exit_code == 4);
    REQUIRE(run_cli("kostka --n 3").exit_code == 4);
    REQUIRE(run_cli("frobnicate --n 3 --k 1").exit_code == 4);
}
