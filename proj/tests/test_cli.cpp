#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "purespin/cli.hpp"
#include "support.hpp"

using namespace purespin;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / "purespin_cli_test";
    fs::create_directories(d);
    return d;
}

std::string slurp(fs::path const& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

cli::JobConfig config(std::string const& name) {
    cli::JobConfig c;
    c.out = (scratch_dir() / name).string();
    return c;
}

}  // namespace

TEST_CASE("flag parsers") {
    auto w = cli::parse_window("0..1");
    CHECK(w.lo == 0);
    CHECK(w.hi == 1);
    CHECK(cli::parse_window("-2").hi == -2);
    CHECK_THROWS_AS(cli::parse_window("2..1"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_window("a..1"), cli::ParseError);

    auto at = cli::parse_specialization("s=1,q=1");
    for (auto const& x : at) CHECK(x == 1);
    auto mixed = cli::parse_specialization("s=1, s3=2/3, q=-5");
    CHECK(mixed[2] == Rational(2, 3));
    CHECK(mixed[0] == 1);
    CHECK(mixed[5] == -5);
    CHECK_THROWS_AS(cli::parse_specialization("s=1"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_specialization("s=1,q=0"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_specialization("s=1,q=x"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_specialization("s=1,t=1,q=1"), cli::ParseError);

    CHECK(cli::parse_format("dot") == cli::OutputFormat::Dot);
    CHECK_THROWS_AS(cli::parse_format("xml"), cli::ParseError);
    CHECK(cli::parse_endpoint("(12)@1") == WeightLabel{FiniteWeight::w12, 1});
    CHECK_THROWS_AS(cli::parse_endpoint("(7)@1"), cli::ParseError);
    CHECK(cli::commands().size() == 11);
}

TEST_CASE("character example") {
    auto c = config("character.json");
    c.lo = cli::parse_endpoint("(0)@0");
    c.hi = cli::parse_endpoint("(1)@0");
    c.specialize = cli::parse_specialization("s=1,q=1");
    auto r = cli::run("character", c);
    REQUIRE(r.exit_code == cli::kExitOk);
    auto j = nlohmann::json::parse(slurp(r.artifact));
    CHECK(j["schema_version"] == 1);
    CHECK(j["ok"] == true);
    CHECK(j["result"]["numerator"] == "1+5t+5t^2+t^3");
    CHECK(j["result"]["denominator"] == "(1-t)^11");
    CHECK(j["result"]["series"][4] == "2772");
}

TEST_CASE("delannoy example") {
    auto c = config("delannoy.json");
    c.r_max = 6;
    c.k_max = 8;
    CHECK(cli::run("delannoy-check", c).exit_code == cli::kExitOk);
}

TEST_CASE("hasse example") {
    auto c = config("hasse.dot");
    c.window = cli::parse_window("0..1");
    c.format = cli::OutputFormat::Dot;
    auto r = cli::run("hasse", c);
    REQUIRE(r.exit_code == cli::kExitOk);
    std::string dot = slurp(r.artifact);
    std::size_t nodes = 0;
    for (auto p = dot.find("[label"); p != std::string::npos; p = dot.find("[label", p + 1)) ++nodes;
    CHECK(nodes == 32);
}

TEST_CASE("every command succeeds on the default interval") {
    for (auto const& name : cli::commands()) {
        auto c = config(name + ".json");
        c.k_max = 2;
        c.r_max = 3;
        auto r = cli::run(name, c);
        CHECK_MESSAGE(r.exit_code == cli::kExitOk, name);
        auto j = nlohmann::json::parse(slurp(r.artifact));
        CHECK(j["schema_version"] == cli::kReportSchemaVersion);
        CHECK(j["command"] == name);
    }
}

TEST_CASE("reports are byte-identical across runs") {
    for (std::string name : {"obstructions", "character", "relations"}) {
        auto a = config(name + "_a.json"), b = config(name + "_b.json");
        a.k_max = b.k_max = 3;
        cli::run(name, a);
        cli::run(name, b);
        CHECK(slurp(a.out) == slurp(b.out));
    }
}

TEST_CASE("exit codes") {
    auto c = config("bad.json");
    CHECK(cli::run("no-such-command", c).exit_code == cli::kExitParse);
    c.lo = cli::parse_endpoint("(1)");
    c.hi = cli::parse_endpoint("(0)");
    CHECK(cli::run("character", c).exit_code == cli::kExitParse);
    c.lo.reset();
    CHECK(cli::run("character", c).exit_code == cli::kExitParse);
    c.hi.reset();
    c.format = cli::OutputFormat::Dot;
    CHECK(cli::run("relations", c).exit_code == cli::kExitParse);
    c.format = cli::OutputFormat::Csv;
    CHECK(cli::run("character", c).exit_code == cli::kExitParse);

    auto d = config("deglex.json");
    d.order = MonomialOrder::Deglex;
    auto r = cli::run("groebner-check", d);
    CHECK(r.exit_code == cli::kExitProperty);
    auto j = nlohmann::json::parse(slurp(r.artifact));
    CHECK(j["ok"] == false);
    CHECK_FALSE(j["result"]["failing"].empty());
}

TEST_CASE("default output directory from the environment") {
    fs::path dir = scratch_dir() / "envdir";
    fs::remove_all(dir);
    ::setenv("PURESPIN_OUT_DIR", dir.string().c_str(), 1);
    CHECK(cli::default_output_dir() == dir.string());
    cli::JobConfig c;
    auto r = cli::run("dims", c);
    CHECK(r.exit_code == cli::kExitOk);
    CHECK(fs::exists(dir / "dims.json"));
    ::unsetenv("PURESPIN_OUT_DIR");
    CHECK(cli::default_output_dir() == ".");
}

TEST_CASE("csv and latex outputs") {
    auto c = config("character.csv");
    c.specialize = cli::parse_specialization("s=1,q=1");
    c.format = cli::OutputFormat::Csv;
    c.k_max = 3;
    auto r = cli::run("character", c);
    REQUIRE(r.exit_code == cli::kExitOk);
    CHECK(slurp(r.artifact) == "k,coefficient\n0,1\n1,16\n2,126\n3,672\n");
    c.format = cli::OutputFormat::Latex;
    c.out = (scratch_dir() / "character.tex").string();
    r = cli::run("character", c);
    CHECK(slurp(r.artifact).find("\\frac{1+5t+5t^2+t^3}") == 0);
}
