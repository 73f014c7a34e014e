#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jacobi/cli.hpp"
#include "jacobi/fmatrix.hpp"
#include "jacobi/spectra.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = jacobi::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path tmpdir() {
    const char* env = std::getenv("TEST_TMPDIR");
    fs::path p = fs::path(env ? env : fs::temp_directory_path().string()) / "cli_test_out";
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("sample writes one sorted row per eigenvalue") {
    const std::vector<std::string> args{"sample", "--n", "5", "--a", "0", "--b", "0", "--beta", "2", "--trials", "2", "--seed", "7"};
    const Run r = run(args);
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == std::vector<std::string>{"trial", "index", "value"});
    for (std::size_t i = 2; i < rows.size(); ++i) {
        if (rows[i][0] == rows[i - 1][0]) {
            CHECK(std::stod(rows[i][2]) >= std::stod(rows[i - 1][2]));
            CHECK(std::stoi(rows[i][1]) == std::stoi(rows[i - 1][1]) + 1);
        }
    }
    CHECK(run(args).out == r.out);

    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "4"});
    CHECK(run(threaded).out == r.out);
    auto single = args;
    single.insert(single.end(), {"--threads", "1"});
    CHECK(run(single).out == r.out);
}

TEST_CASE("parameter errors exit with code 2") {
    const Run r = run({"sample", "--n", "5", "--a", "-1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("a > -1") != std::string::npos);
    CHECK(run({"sample", "--beta", "0"}).code == 2);
    CHECK(run({"sample", "--n", "0"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("roots") {
    const Run r = run({"roots", "--n", "2", "--a-tilde", "1", "--b-tilde", "1"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"index", "value"});
    CHECK(std::stod(rows[1][1]) == doctest::Approx(-2 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(std::stod(rows[2][1]) == doctest::Approx(2 / std::sqrt(3.0)).epsilon(1e-14));

    // n = 1: the single root of P_1^{(γ,δ)} on [-2, 2] is 2 (δ - γ)/(γ + δ + 2).
    const Run one = run({"roots", "--n", "1", "--a-tilde", "3", "--b-tilde", "1.5"});
    const double g = 2, d = 0.5;
    CHECK(std::stod(csv_rows(one.out)[1][1]) == doctest::Approx(2 * (d - g) / (g + d + 2)));

    const auto sym = csv_rows(run({"roots", "--n", "7", "--a", "2.5", "--b", "2.5"}).out);
    for (std::size_t i = 1; i <= 7; ++i)
        CHECK(std::stod(sym[i][1]) == doctest::Approx(-std::stod(sym[8 - i][1])).scale(1.0));
}

TEST_CASE("deviation summary") {
    const Run r = run({"deviation", "--trials", "300"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "deviation");
    CHECK(j["perturbation_bound_violations"] == 0);
    for (const char* k : {"max_dev_quantiles", "alpha_deviation_quantiles", "tail_bound", "tail_bound_exponent",
                          "empirical_exceedance", "scaled_dev_median"})
        CHECK(j.contains(k));
    CHECK(j["tail_bound"].get<double>() == doctest::Approx(jacobi::deviation_tail_bound(20, 10, 10, 1.0)));
    CHECK(std::isfinite(j["scaled_dev_median"].get<double>()));
}

TEST_CASE("compare with plot data") {
    const fs::path dir = tmpdir();
    const fs::path out = dir / "prop.json";
    const Run r = run({"compare", "--model", "proportional", "--bins", "40", "--grid", "400", "--out", out.string()});
    REQUIRE(r.code == 0);
    const json j = json::parse(slurp(out));
    CHECK(j["schema_version"] == 1);
    CHECK(j["ks"].get<double>() < 0.05);
    CHECK(j["n_pooled"] == 5000);
    CHECK(j["support"].size() == 2);

    const auto hist = csv_rows(slurp(dir / "prop_hist.csv"));
    REQUIRE(hist.size() == 41);
    CHECK(hist[0] == std::vector<std::string>{"bin_left", "bin_right", "count"});
    long total = 0;
    for (std::size_t i = 1; i < hist.size(); ++i) total += std::stol(hist[i][2]);
    CHECK(total == 5000);

    const auto dens = csv_rows(slurp(dir / "prop_density.csv"));
    REQUIRE(dens.size() == 401);
    CHECK(dens[0] == std::vector<std::string>{"x", "f"});
    double area = 0;
    for (std::size_t i = 2; i < dens.size(); ++i)
        area += 0.5 * (std::stod(dens[i][1]) + std::stod(dens[i - 1][1])) * (std::stod(dens[i][0]) - std::stod(dens[i - 1][0]));
    CHECK(area == doctest::Approx(1.0).epsilon(1e-3));

    const Run arc = run({"compare", "--model", "arcsine"});
    REQUIRE(arc.code == 0);
    CHECK(json::parse(arc.out)["ks"].get<double>() < 0.05);

    CHECK(run({"compare", "--bins", "10"}).code == 2);
}

TEST_CASE("fmatrix routes") {
    const std::vector<std::string> base{"fmatrix", "--n", "10", "--n1", "25", "--n2", "30", "--trials", "200", "--format", "json"};
    auto direct = base, tri = base;
    direct.insert(direct.end(), {"--route", "direct", "--seed", "1"});
    tri.insert(tri.end(), {"--route", "tridiag", "--seed", "2"});
    const Run rd = run(direct), rt = run(tri);
    REQUIRE(rd.code == 0);
    REQUIRE(rt.code == 0);
    auto flatten = [](const json& j) {
        std::vector<double> v;
        for (const auto& s : j["spectra"])
            for (double x : s) v.push_back(x);
        return v;
    };
    const auto vd = flatten(json::parse(rd.out)), vt = flatten(json::parse(rt.out));
    CHECK(vd.size() == 2000);
    CHECK(jacobi::ks_two_sample(jacobi::Ecdf(vd), jacobi::Ecdf(vt)) < 0.05);

    const Run big = run({"fmatrix", "--route", "direct", "--n", "501", "--n1", "600", "--n2", "700"});
    CHECK(big.code == 2);
    CHECK(run({"fmatrix", "--n", "10", "--n1", "5", "--n2", "30"}).code == 2);
    CHECK(run({"fmatrix", "--transform", "thm45"}).code == 2);
}

TEST_CASE("fmatrix transform matches the library") {
    const std::vector<std::string> common{"fmatrix", "--n", "20", "--n1", "400", "--n2", "800", "--trials", "1", "--seed", "9", "--format", "json"};
    auto plain = common, t42 = common;
    t42.insert(t42.end(), {"--transform", "thm42"});
    const json jp = json::parse(run(plain).out), jt = json::parse(run(t42).out);
    const jacobi::FDims d(20, 400, 800);
    std::vector<double> expect;
    for (double x : jp["spectra"][0]) expect.push_back(jacobi::semicircle_f_transform(x, d));
    std::sort(expect.begin(), expect.end());
    REQUIRE(jt["spectra"][0].size() == 20);
    for (std::size_t i = 0; i < 20; ++i) CHECK(jt["spectra"][0][i].get<double>() == doctest::Approx(expect[i]).epsilon(1e-14));
    CHECK(jt["transform"] == "thm42");

    const fs::path out = tmpdir() / "fm.csv";
    auto csv = common;
    csv.back() = "csv";
    csv.insert(csv.end(), {"--out", out.string()});
    REQUIRE(run(csv).code == 0);
    CHECK(csv_rows(slurp(out)).size() == 21);
    const json summary = json::parse(slurp(tmpdir() / "fm_summary.json"));
    CHECK(summary["command"] == "fmatrix");
    CHECK(summary["dims"]["n1"] == 400);
}

TEST_CASE("verify") {
    const Run ok = run({"verify", "--criteria", "1", "2", "8"});
    CHECK(ok.code == 0);
    const json j = json::parse(ok.out);
    CHECK(j["all_passed"] == true);
    std::vector<int> ids;
    for (const auto& c : j["criteria"]) ids.push_back(c["id"]);
    CHECK(ids == std::vector<int>{1, 2, 8});

    const Run bad = run({"verify", "--criteria", "1", "--tolerance-scale", "1e-20"});
    CHECK(bad.code != 0);
    CHECK(json::parse(bad.out)["criteria"][0]["passed"] == false);
    CHECK(run({"verify", "--criteria", "14"}).code == 2);
}

TEST_CASE("output plumbing") {
    CHECK(run({"sample", "--out", "/nonexistent_dir/x/y.csv"}).code == 3);
    CHECK(jacobi::cli::format_number(0.1) == "0.10000000000000001");
    CHECK(jacobi::cli::format_number(2.0) == "2");
    CHECK(jacobi::cli::format_number(-1.5e-300) == "-1.5000000000000001e-300");
    const json s = json::parse(run({"sample", "--format", "json"}).out);
    CHECK(s["schema_version"] == 1);
    CHECK(s["trials"][0].size() == 10);
    const json rr = json::parse(run({"roots", "--format", "json"}).out);
    CHECK(rr["schema_version"] == 1);

    // Every numeric CSV cell round-trips exactly.
    const auto rows = csv_rows(run({"sample", "--n", "4"}).out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double v = std::stod(rows[i][2]);
        CHECK(jacobi::cli::format_number(v) == rows[i][2]);
    }
}
