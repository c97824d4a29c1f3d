#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "scw/cli.hpp"

using namespace scw;

namespace {

cli::RunReport invoke(std::vector<std::string> args) {
    try {
        return cli::run(cli::parse_args(args));
    } catch (const cli::UsageError& e) {
        return {2, e.what()};
    }
}

bool has_line(const std::string& text, const std::string& line) {
    return text.find(line + "\n") != std::string::npos;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "scw_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("chern on a clutched bundle reports its degree") {
    const auto r = invoke({"chern", "--bundle", "clutch3", "--poly", "chern:1"});
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.text, "class ρ=chern:1 bundle=clutch3: closed=yes pairings=[3] witness=absent"));
    CHECK(has_line(r.text, "check winding-oracle: pass (winding 3)"));
    CHECK(r.text.rfind("run-report v1\n", 0) == 0);
    CHECK(has_line(r.text, "status: pass"));
}

TEST_CASE("float mode prints bit-exact pairings") {
    const auto r = invoke({"chern", "--bundle", "clutch-2", "--mode", "float"});
    CHECK(r.exit_code == 0);
    CHECK(r.text.find("pairings=[{-0x1p+1,0x0p+0}]") != std::string::npos);
}

TEST_CASE("betti numbers of a 3-sphere") {
    const auto r = invoke({"betti", "--space", "boundary-sphere:3"});
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.text, "betti: 1 0 0 1"));
}

TEST_CASE("every verify suite passes") {
    const auto r = invoke({"verify", "--suite", "all", "--seed", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.text.find("FAIL") == std::string::npos);
    CHECK(invoke({"verify", "--suite", "nonsense"}).exit_code == 2);
}

TEST_CASE("reznikov is float only") {
    CHECK(invoke({"reznikov", "--mode", "exact"}).exit_code == 2);
    const auto r = invoke({"reznikov", "--order", "32", "--probes", "100"});
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.text, "lambda: 0.333333333333333"));
}

TEST_CASE("usage and parse failures exit with 2") {
    CHECK(invoke({}).exit_code == 2);
    CHECK(invoke({"chern"}).exit_code == 2);
    CHECK(invoke({"betti", "--space", "boundary-sphere:x"}).exit_code == 2);
    CHECK(invoke({"chern", "--bundle", scratch("missing.bundle").string()}).exit_code == 2);
    CHECK(invoke({"horn-fill", "--n", "2", "--k", "3"}).exit_code == 2);
    CHECK(invoke({"generate", "--kind", "clutch"}).exit_code == 2);

    const auto bad = scratch("bad.bundle");
    std::ofstream(bad) << "bundle v1; group u1;\nsimplicial-set v1\ndim 0: two\n";
    const auto r = invoke({"chern", "--bundle", bad.string()});
    CHECK(r.exit_code == 2);
    CHECK(r.text.find("parse error: " + bad.string() + ": line 3:") != std::string::npos);
}

TEST_CASE("generated files feed back into chern") {
    const std::string prefix = scratch("gen2").string();
    const auto g = invoke({"generate", "--kind", "clutch", "--n", "2", "--out", prefix});
    REQUIRE(g.exit_code == 0);
    const auto r = invoke({"chern", "--bundle", prefix + ".bundle", "--connection", prefix + ".connection"});
    CHECK(r.exit_code == 0);
    CHECK(r.text.find("pairings=[2]") != std::string::npos);

    const std::string horn = scratch("horn").string();
    CHECK(invoke({"generate", "--kind", "horn-demo", "--n", "3", "--k", "0", "--algebra", "su2", "--out", horn}).exit_code == 0);
    CHECK(invoke({"horn-fill", "--n", "3", "--k", "1", "--algebra", "u1", "--seed", "4"}).exit_code == 0);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"clutch", "--n", "-3", "--seed", "9"},
          std::vector<std::string>{"verify", "--suite", "bundles", "--seed", "9"},
          std::vector<std::string>{"reznikov", "--seed", "9"}}) {
        const auto a = invoke(args), b = invoke(args);
        CHECK(a.exit_code == 0);
        CHECK(a.text == b.text);
    }
}

TEST_CASE("a perturbed bundle file fails with exit code 1") {
    const std::string prefix = scratch("perturbed").string();
    REQUIRE(invoke({"generate", "--kind", "clutch", "--n", "1", "--out", prefix}).exit_code == 0);
    std::ifstream in(prefix + ".bundle");
    std::string text((std::istreambuf_iterator<char>(in)), {});
    text += "transition 2.0.1: exp([(1)*x1])\n";
    std::ofstream(prefix + ".bundle") << text;
    const auto r = invoke({"chern", "--bundle", prefix + ".bundle"});
    CHECK(r.exit_code == 1);
    CHECK(r.text.find("check bundle.cocycle: FAIL") != std::string::npos);
}
