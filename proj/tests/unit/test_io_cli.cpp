#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rieszap/cli.hpp"
#include "rieszap/errors.hpp"
#include "rieszap/io.hpp"
#include "rieszap/report.hpp"

using namespace rieszap;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    const auto dir = fs::temp_directory_path() / "rieszap_unit";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("set JSON round trip") {
    const auto s = IntervalSet::normalize(std::vector<std::pair<double, double>>{{0.9, 1.0}, {0.0, 0.2}, {0.5, 0.6}});
    const auto j = io::set_to_json(s);
    CHECK(io::set_from_json(j) == s);
    const auto path = scratch_dir() / "set.json";
    io::save_set(path, s);
    CHECK(io::load_set(path) == s);

    CHECK_THROWS_AS(io::set_from_json(io::Json::parse(R"({"arcs": [[0.2, 1.4]]})")), InputError);
    CHECK_THROWS_AS(io::set_from_json(io::Json::parse(R"({"arcs": []})")), InputError);
    CHECK_THROWS_AS(io::set_from_json(io::Json::parse(R"({"nope": 1})")), InputError);
    CHECK_THROWS_AS(io::load_set(scratch_dir() / "missing.json"), InputError);
}

TEST_CASE("report table") {
    report::Table t({"a", "b"});
    t.add_row({std::int64_t{3}, 0.1});
    CHECK(t.to_csv() == "a,b\n3,0.10000000000000001\n");
    CHECK(t.to_json()[0]["a"] == 3);
    CHECK_THROWS_AS(t.add_row({1.0}), InvalidArgument);
    const auto svg = report::svg_loglog_chart("t", "x", "y", {report::Series{"s", {1, 10}, {1, 0.1}, false}});
    CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("parse_int_list") {
    CHECK(cli::parse_int_list("4..7") == std::vector<std::int64_t>{4, 5, 6, 7});
    CHECK(cli::parse_int_list("16,32") == std::vector<std::int64_t>{16, 32});
    CHECK(cli::parse_int_list("4..5,9") == std::vector<std::int64_t>{4, 5, 9});
    CHECK(cli::parse_int_list("-2..0") == std::vector<std::int64_t>{-2, -1, 0});
    CHECK(cli::parse_int_list("").empty());
    CHECK_THROWS_AS(cli::parse_int_list("4,x"), InvalidArgument);
}

TEST_CASE("cli: set build and info") {
    const auto path = (scratch_dir() / "adv.json").string();
    auto r = cli_run({"set", "build", "--adversarial", "--epsilon", "0.25", "--lmax", "64", "--out", path});
    CHECK(r.code == cli::kOk);
    CHECK(io::load_set(path).measure() > 0.75);

    CHECK(cli_run({"set", "build", "--adversarial", "--epsilon", "1.5", "--lmax", "8"}).code == cli::kInvalidInput);

    const auto full = (scratch_dir() / "full.json").string();
    io::save_set(full, IntervalSet::full_circle());
    r = cli_run({"set", "info", "--set", full, "--coeffs", "2"});
    CHECK(r.code == cli::kOk);
    const auto j = io::Json::parse(r.out);
    CHECK(j["measure"] == 1.0);
    CHECK(j["arcs"] == 1);
    CHECK(j["coefficients"].size() == 3);
}

TEST_CASE("cli: riesz") {
    const auto full = (scratch_dir() / "full.json").string();
    io::save_set(full, IntervalSet::full_circle());
    auto r = cli_run({"riesz", "--set", full, "--freqs", "1,2,3"});
    REQUIRE(r.code == cli::kOk);
    CHECK(io::Json::parse(r.out)["lower"].get<double>() == doctest::Approx(1.0));

    const auto half = (scratch_dir() / "half.json").string();
    io::save_set(half, IntervalSet::normalize(std::vector<std::pair<double, double>>{{0.0, 0.5}}));
    r = cli_run({"riesz", "--set", half, "--freqs", "0,1", "--format", "csv"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.rfind("lower,upper,cs_lower,offdiag_energy,size\n0.1816901138162", 0) == 0);

    CHECK(cli_run({"riesz", "--set", half}).code == cli::kInvalidInput);
    CHECK(cli_run({"riesz", "--set", half, "--freqs", "1,1"}).code == cli::kInvalidInput);
    CHECK(cli_run({"riesz", "--set", half, "--freqs", "1", "--verify"}).code == cli::kInvalidInput);
    CHECK(cli_run({"riesz", "--bogus"}).code == cli::kInvalidInput);
}

TEST_CASE("cli: thm2 build file verifies, tampered file exits 3") {
    const auto dir = scratch_dir();
    const auto build = (dir / "build.json").string();
    auto r = cli_run({"thm2", "--arc", "0,0.3", "--count", "3", "--build-out", build});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.rfind("k,n_k,shift,cert_lambda_min,schedule_target\n1,1,0,", 0) == 0);
    CHECK(cli_run({"riesz", "--build", build, "--verify"}).code == cli::kOk);

    auto j = io::read_json_file(build);
    j["blocks"][2]["cert_lambda_min"] = j["blocks"][2]["cert_lambda_min"].get<double>() + 1e-6;
    const auto tampered = (dir / "tampered.json").string();
    io::write_text_file(tampered, j.dump());
    r = cli_run({"riesz", "--build", tampered, "--verify"});
    CHECK(r.code == cli::kSearchFailure);

    r = cli_run({"thm2", "--arc", "0,0.3", "--count", "3", "--n-max", "3"});
    CHECK(r.code == cli::kSearchFailure);
}

TEST_CASE("cli: thm1, thm3, verify") {
    const auto full = (scratch_dir() / "full.json").string();
    io::save_set(full, IntervalSet::full_circle());
    auto r = cli_run({"thm2", "--set", full, "--count", "3", "--n-max", "10"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find(",1,0,1,") != std::string::npos);

    r = cli_run({"thm1", "--ells", "2", "--ns", "16,32"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("ell,N,delta,rayleigh_uniform,tail_bound\n2,16,", 0) == 0);
    CHECK(cli_run({"thm1", "--ells", "100"}).code == cli::kInvalidInput);

    CHECK(cli_run({"thm3", "--set", full, "--alphas", "1.5", "--n-range", ""}).code == cli::kInvalidInput);
    CHECK(cli_run({"thm3", "--set", full, "--alphas", "2.0,1.5", "--n-range", "4..5", "--n-range", "6..7"}).code ==
          cli::kOk);

    CHECK(cli_run({"verify", "lemma4", "--limit", "100"}).code == cli::kOk);
    CHECK(cli_run({"verify", "divisors", "--limit", "1000"}).code == cli::kOk);
    CHECK(cli_run({"verify", "schedule", "--epsilon", "0.25"}).code == cli::kOk);
    CHECK(cli_run({"verify", "schedule", "--epsilon", "2"}).code == cli::kInvalidInput);
    CHECK(cli_run({"--help"}).code == cli::kOk);
}
