#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace arcwalk::cli;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "arcwalk");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    int const status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

std::filesystem::path scratch_dir()
{
    auto const dir = std::filesystem::temp_directory_path() / "arcwalk_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("exact2 tables")
{
    auto const r = invoke({"exact2", "--a", "0.5", "--points", "50"});
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("# ", 0) == 0);
    CHECK(r.out.find("# N: 2") != std::string::npos);
    CHECK(r.out.find("# a: 0.5") != std::string::npos);
    CHECK(r.out.find("# version: ") != std::string::npos);
    CHECK(r.out.find("theta,pdf_angle,cdf_angle") != std::string::npos);
    CHECK(r.out.find("r,pdf_radius,cdf_radius") != std::string::npos);
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("support header")
{
    auto const r = invoke({"support", "--n", "3", "--a", "0.85", "--points", "20"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("# r_min: 2.11769261764") != std::string::npos);
    CHECK(r.out.find("# unique: true") != std::string::npos);
}

TEST_CASE("genchi2 JSON")
{
    auto const r = invoke({"genchi2", "--w", "1", "--k", "2", "--lambda", "0", "--x", "2", "--format", "json"});
    REQUIRE(r.status == 0);
    auto const j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("tables"));
    CHECK(r.out.find("0.63212055882855") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"bogus"}).status == 2);
    CHECK(invoke({"exact2", "--a", "2.0"}).status == 2);
    CHECK(invoke({"support", "--n", "0"}).status == 2);
    CHECK(invoke({"exact2", "--format", "xml"}).status == 2);
    CHECK(invoke({"genchi2", "--w", "1", "--k", "1"}).status == 2);
    auto const grid = invoke({"recurse", "--n", "2", "--a", "0.5", "--grid-r", "4", "--grid-theta", "4"});
    CHECK(grid.status == 3);
    CHECK(grid.err.find("numeric recursion failed") != std::string::npos);
    auto const usage = invoke({"exact2", "--nope"});
    CHECK(usage.status == 2);
    CHECK(usage.err.find("Usage") != std::string::npos);
    CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("config file values and flag precedence")
{
    auto const dir = scratch_dir();
    auto const cfg = dir / "cfg.json";
    {
        std::ofstream f(cfg);
        f << R"({"a": 0.7, "points": 30, "format": "json"})";
    }
    auto const from_file = invoke({"exact2", "--config", cfg.string()});
    auto const explicit_flags = invoke({"exact2", "--a", "0.7", "--points", "30", "--format", "json"});
    REQUIRE(from_file.status == 0);
    CHECK(from_file.out == explicit_flags.out);
    auto const override_a = invoke({"exact2", "--config", cfg.string(), "--a", "0.4"});
    auto const direct = invoke({"exact2", "--a", "0.4", "--points", "30", "--format", "json"});
    CHECK(override_a.out == direct.out);
    CHECK(invoke({"exact2", "--config", (dir / "missing.json").string()}).status == 2);
}

TEST_CASE("compare reports are byte-identical across runs and thread counts")
{
    std::vector<std::string> const base{"compare", "--regime", "exact2", "--a", "0.5", "--count", "20000", "--seed", "7"};
    auto with_threads = [&](const char* t) {
        auto args = base;
        args.push_back("--threads");
        args.push_back(t);
        return invoke(args);
    };
    auto const a = with_threads("1");
    auto const b = with_threads("3");
    auto const c = invoke(base);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    auto const j = nlohmann::json::parse(a.out);
    CHECK(j["summary"]["ks_radius"]["upper"].get<double>() < 0.02);
}

TEST_CASE("output files")
{
    auto const dir = scratch_dir();
    auto const prefix = dir / "ex";
    auto const r = invoke({"exact2", "--points", "10", "--output", prefix.string()});
    REQUIRE(r.status == 0);
    CHECK(std::filesystem::exists(dir / "ex_angle.csv"));
    CHECK(std::filesystem::exists(dir / "ex_radius.csv"));
    CHECK(slurp(dir / "ex_angle.csv").rfind("# ", 0) == 0);
    auto const json = dir / "g.json";
    CHECK(invoke({"genchi2", "--w", "1", "--k", "1", "--lambda", "0", "--x", "1", "--format", "json", "--output", json.string()}).status == 0);
    CHECK(nlohmann::json::parse(slurp(json)).contains("tables"));
}

TEST_CASE("write_csv formatting")
{
    Report rep;
    rep.meta["N"] = 2;
    rep.tables.push_back({"t", {"x", "y"}, {{0.1, 1.0 / 3}}});
    rep.tables.push_back({"u", {"z"}, {{2.0}}});
    std::ostringstream out;
    write_csv(rep, out);
    CHECK(out.str().find("0.10000000000000001,0.33333333333333331\n") != std::string::npos);
    CHECK(out.str().find("# table: t\n") != std::string::npos);
}
