#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bcpw/densities.hpp"
#include "bcpw/io.hpp"
#include "bcpw/quadrature.hpp"

using namespace bcpw;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("bicomplex text form round trips") {
    const Bicomplex Z(1.5, -2.25, 3.125, -4.0625);
    CHECK(to_text(Z) == "1.5 - 2.25 i + 3.125 j - 4.0625 k");
    CHECK(parse_bicomplex(to_text(Z)) == Z);

    // Shortest round-trip formatting keeps awkward doubles exact.
    const Bicomplex W(0.1, 1e-17, -3.333333333333333e5, 2.0 / 3.0);
    CHECK(parse_bicomplex(to_text(W)) == W);

    CHECK(parse_bicomplex("0,0,1,0") == unit_j());
    CHECK(parse_bicomplex("2.5") == Bicomplex(2.5));
    CHECK(parse_bicomplex("-i + k") == Bicomplex(0.0, -1.0, 0.0, 1.0));
    CHECK(parse_bicomplex("1+2i") == Bicomplex(1.0, 2.0, 0.0, 0.0));
    CHECK(parse_bicomplex("i") == unit_i());
    CHECK(parse_bicomplex("1.5e-2 i") == Bicomplex(0.0, 0.015, 0.0, 0.0));

    CHECK_THROWS_AS(parse_bicomplex("1,2,3"), ConfigError);
    CHECK_THROWS_AS(parse_bicomplex("1+2q"), ConfigError);
    CHECK_THROWS_AS(parse_bicomplex(""), ConfigError);
    CHECK_THROWS_AS(parse_bicomplex("1 + * 2i"), ConfigError);

    CHECK(format_complex(Cplx(1.5, -2.0)) == "1.5 - 2 i");
    CHECK(format_complex(Cplx(0.0, 0.0)) == "0 + 0 i");
}

TEST_CASE("samples CSV round trips nodes and values exactly") {
    const ProductGrid g = make_grid(DInterval::both(-3.0, 3.0), 33, Scheme::trapezoid);
    const SampledProductFunction F = sample_density("gaussian", g);
    const auto path = temp_path("bcpw_io_samples.csv");
    write_samples_csv(F, path.string());

    const SampledProductFunction R = read_samples_csv(path.string());
    REQUIRE(R.grid.nodes1.size() == F.grid.nodes1.size());
    for (std::size_t m = 0; m < F.grid.nodes1.size(); ++m) {
        CHECK(R.grid.nodes1[m] == F.grid.nodes1[m]);
        CHECK(R.grid.nodes2[m] == F.grid.nodes2[m]);
        CHECK(R.values1[m] == F.values1[m]);
        CHECK(R.values2[m] == F.values2[m]);
    }
    // Weights are rebuilt as trapezoid weights on the stored nodes.
    double total = 0.0;
    for (double w : R.grid.weights1) {
        CHECK(w > 0.0);
        total += w;
    }
    CHECK(std::abs(total - 6.0) <= 1e-12);
    std::filesystem::remove(path);
}

TEST_CASE("samples CSV rejects malformed input") {
    CHECK_THROWS_AS(read_samples_csv("/nonexistent/bcpw.csv"), ConfigError);

    const auto path = temp_path("bcpw_io_bad.csv");
    {
        std::ofstream out(path);
        out << "t1,f1_re,f1_im,t2,f2_re,f2_im\n";
        out << "1,0,0,1,0,0\n";
        out << "0.5,0,0,0.5,0,0\n";
    }
    CHECK_THROWS_AS(read_samples_csv(path.string()), ConfigError);
    {
        std::ofstream out(path);
        out << "wrong,header\n";
    }
    CHECK_THROWS_AS(read_samples_csv(path.string()), ConfigError);
    {
        std::ofstream out(path);
        out << "t1,f1_re,f1_im,t2,f2_re,f2_im\n";
    }
    CHECK_THROWS_AS(read_samples_csv(path.string()), ConfigError);
    {
        std::ofstream out(path);
        out << "t1,f1_re,f1_im,t2,f2_re,f2_im\n";
        out << "1,0,0\n";
    }
    CHECK_THROWS_AS(read_samples_csv(path.string()), ConfigError);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(write_samples_csv({}, "/nonexistent-dir/bcpw.csv"), ConfigError);
}

TEST_CASE("report CSV is byte deterministic") {
    std::vector<ReportRow> rows;
    rows.push_back({"alpha", "n=4", 1.0 / 3.0, -2.0 / 7.0, 1e-6, true});
    rows.push_back({"beta", "T=40", 0.0, 5.5e-12, 1e-9, false});

    const auto p1 = temp_path("bcpw_report_1.csv");
    const auto p2 = temp_path("bcpw_report_2.csv");
    write_report_csv(rows, p1.string());
    write_report_csv(rows, p2.string());

    const std::string a = slurp(p1);
    CHECK(a == slurp(p2));
    CHECK(a.rfind("test,parameter,component1_value,component2_value,bound,pass\n", 0) == 0);
    CHECK(a.find("alpha,n=4,") != std::string::npos);
    CHECK(a.find(",pass\n") != std::string::npos);
    CHECK(a.find(",fail\n") != std::string::npos);
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("grid config JSON round trips including infinite bounds") {
    const std::string text =
        grid_config_to_json(DInterval::real_line(), 64, Scheme::gauss_legendre, 25.0);
    const GridConfig cfg = grid_config_from_json(text);
    CHECK(std::isinf(cfg.interval.lo1));
    CHECK(cfg.interval.lo1 < 0.0);
    CHECK(std::isinf(cfg.interval.hi1));
    CHECK(cfg.interval.hi1 > 0.0);
    CHECK(cfg.n == 64);
    CHECK(cfg.scheme == Scheme::gauss_legendre);
    CHECK(cfg.truncation == 25.0);

    const std::string finite =
        grid_config_to_json(DInterval{0.0, 1.0, -2.0, 3.5}, 17, Scheme::trapezoid, 0.0);
    const GridConfig f = grid_config_from_json(finite);
    CHECK(f.interval.lo1 == 0.0);
    CHECK(f.interval.hi1 == 1.0);
    CHECK(f.interval.lo2 == -2.0);
    CHECK(f.interval.hi2 == 3.5);
    CHECK(f.scheme == Scheme::trapezoid);

    CHECK_THROWS_AS(grid_config_from_json("{"), ConfigError);
    CHECK_THROWS_AS(grid_config_from_json("[1,2]"), ConfigError);
    CHECK_THROWS_AS(grid_config_from_json(
                        R"({"interval":[0,1,0,1],"n":8,"scheme":"simpson","truncation":0})"),
                    ConfigError);
    CHECK_THROWS_AS(grid_config_from_json(
                        R"({"interval":[0,1],"n":8,"scheme":"trapezoid","truncation":0})"),
                    ConfigError);
}

TEST_CASE("values CSV carries points and idempotent components") {
    const std::vector<Bicomplex> pts{Bicomplex(0.0), unit_i()};
    const std::vector<Bicomplex> vals{Bicomplex(2.0), Bicomplex(0.0, 0.5, 0.25, 0.0)};
    const auto path = temp_path("bcpw_values.csv");
    write_values_csv(pts, vals, path.string());
    const std::string text = slurp(path);
    CHECK(text.rfind("x0,x1,x2,x3,re_beta1,im_beta1,re_beta2,im_beta2\n", 0) == 0);
    CHECK(text.find("0,0,0,0,2,0,2,0\n") != std::string::npos);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(write_values_csv(pts, {}, path.string()), std::invalid_argument);
}
