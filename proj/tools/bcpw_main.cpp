#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "bcpw/bicomplex.hpp"
#include "bcpw/cauchy.hpp"
#include "bcpw/densities.hpp"
#include "bcpw/io.hpp"
#include "bcpw/paley_wiener.hpp"
#include "bcpw/quadrature.hpp"
#include "bcpw/transform.hpp"
#include "bcpw/verify.hpp"

namespace {

using bcpw::Bicomplex;

struct DecomposeOpts {
    std::string z;
};

struct TransformOpts {
    std::string density, density_csv;
    int n = 4096;
    double T = 40.0;
    std::string scheme = "gauss_legendre";
    double prefactor = bcpw::TransformConvention{}.forward_prefactor;
    int sign = -1;
    bool inverse = false;
    std::string points;
    std::vector<std::string> point;
    std::string out;
};

struct ExtendOpts {
    std::string density, density_csv;
    int n = 2048;
    double T = 40.0;
    std::vector<std::string> point;
    std::string out;
};

struct RecoverOpts {
    std::string density, density_csv;
    int n = 2048;
    double T = 40.0;
    std::string line = "1,0";
    double tmax = 10.0;
    int tn = 512;
    double xmax = 200.0;
    int xn = 32768;
    std::string out = "recovered.csv";
};

struct BandOpts {
    std::string density, density_csv;
    int n = 256;
    double A = 0.0;  // 0: band limit from the density name or CSV extent
    std::vector<std::string> point;
    std::string out;
};

struct CauchyOpts {
    std::string density, density_csv;
    int n = 1048576;
    double T = 1e4;
    std::vector<std::string> point;
    std::string out;
};

struct VerifyCliOpts {
    std::string suite = "all";
    std::string density, density_csv;
    int n = 0;
    double T = 0.0;
    double tol = 0.0;
    std::uint64_t seed = 20260817;
    std::string out;
};

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw bcpw::ConfigError(std::string(what) + " must be positive");
}

void require_positive(int v, const char* what) {
    if (v <= 0) throw bcpw::ConfigError(std::string(what) + " must be positive");
}

bcpw::SampledProductFunction cli_density(const std::string& name, const std::string& fallback,
                                         const std::string& csv,
                                         const std::function<bcpw::ProductGrid()>& grid) {
    if (!name.empty() && !csv.empty()) {
        throw bcpw::ConfigError("--density and --density-csv are mutually exclusive");
    }
    if (!csv.empty()) return bcpw::read_samples_csv(csv);
    return bcpw::sample_density(name.empty() ? fallback : name, grid());
}

std::vector<Bicomplex> parse_point_list(const std::string& sweep,
                                        const std::vector<std::string>& literals,
                                        const std::string& fallback_sweep) {
    std::vector<Bicomplex> pts;
    std::string s = sweep;
    if (s.empty() && literals.empty()) s = fallback_sweep;
    if (!s.empty()) {
        const auto c1 = s.find(':');
        const auto c2 = s.rfind(':');
        if (c1 == std::string::npos || c2 == c1) {
            throw bcpw::ConfigError("points must be lo:hi:count");
        }
        double lo = 0.0, hi = 0.0;
        long count = 0;
        try {
            lo = std::stod(s.substr(0, c1));
            hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
            count = std::stol(s.substr(c2 + 1));
        } catch (const std::exception&) {
            throw bcpw::ConfigError("points must be lo:hi:count");
        }
        if (count < 1) throw bcpw::ConfigError("points count must be >= 1");
        for (long m = 0; m < count; ++m) {
            const double x = count == 1 ? lo : lo + (hi - lo) * m / (count - 1);
            pts.push_back(Bicomplex(x));
        }
    }
    for (const std::string& lit : literals) pts.push_back(bcpw::parse_bicomplex(lit));
    if (pts.empty()) throw bcpw::ConfigError("no evaluation points; pass --points or --point");
    return pts;
}

void emit_values(const std::vector<Bicomplex>& pts, const std::vector<Bicomplex>& vals,
                 const std::string& out) {
    if (!out.empty()) {
        bcpw::write_values_csv(pts, vals, out);
        std::cout << "wrote " << vals.size() << " values to " << out << "\n";
        return;
    }
    for (std::size_t m = 0; m < pts.size(); ++m) {
        std::cout << bcpw::to_text(pts[m]) << " -> " << bcpw::to_text(vals[m]) << "\n";
    }
}

int run_decompose(const DecomposeOpts& o) {
    if (o.z.empty()) throw bcpw::ConfigError("decompose requires --z");
    const Bicomplex Z = bcpw::parse_bicomplex(o.z);
    std::cout << "Z = " << bcpw::to_text(Z) << "\n";
    std::cout << "beta1 = " << bcpw::format_complex(Z.beta1()) << "\n";
    std::cout << "beta2 = " << bcpw::format_complex(Z.beta2()) << "\n";
    return 0;
}

int run_transform(const TransformOpts& o) {
    require_positive(o.n, "n");
    require_positive(o.T, "T");
    const bcpw::Scheme scheme = bcpw::scheme_from_string(o.scheme);
    const bcpw::SampledProductFunction samples =
        cli_density(o.density, "exp_decay", o.density_csv, [&] {
            return bcpw::make_grid(bcpw::DInterval::both(-o.T, o.T), o.n, scheme);
        });
    bcpw::TransformConvention conv{o.prefactor, o.sign};
    conv.validate();
    const std::vector<Bicomplex> pts = parse_point_list(o.points, o.point, "-5:5:50");
    const std::vector<Bicomplex> vals = o.inverse
                                            ? bcpw::inverse_fourier(samples, pts, conv)
                                            : bcpw::bicomplex_fourier(samples, pts, conv);
    emit_values(pts, vals, o.out);
    return 0;
}

int run_extend(const ExtendOpts& o) {
    require_positive(o.n, "n");
    require_positive(o.T, "T");
    const bcpw::SampledProductFunction samples =
        cli_density(o.density, "exp_decay", o.density_csv, [&] {
            return bcpw::make_grid(bcpw::DInterval::positive_line(), o.n,
                                   bcpw::Scheme::gauss_legendre, o.T);
        });
    const bcpw::HalfPlaneDensity density = bcpw::make_half_plane_density(samples);
    const std::vector<Bicomplex> pts = parse_point_list("", o.point, "");
    std::vector<Bicomplex> vals;
    vals.reserve(pts.size());
    for (const Bicomplex& Z : pts) vals.push_back(bcpw::extend(density, Z));
    emit_values(pts, vals, o.out);
    return 0;
}

int run_recover(const RecoverOpts& o) {
    require_positive(o.n, "n");
    require_positive(o.T, "T");
    require_positive(o.tn, "tn");
    require_positive(o.tmax, "tmax");
    require_positive(o.xn, "xn");
    require_positive(o.xmax, "xmax");
    if (o.out.empty()) throw bcpw::ConfigError("recover requires --out");
    const bcpw::SampledProductFunction samples =
        cli_density(o.density, "exp_decay", o.density_csv, [&] {
            return bcpw::make_grid(bcpw::DInterval::positive_line(), o.n,
                                   bcpw::Scheme::gauss_legendre, o.T);
        });
    const bcpw::ProductFunction F = bcpw::extension(bcpw::make_half_plane_density(samples));

    const auto comma = o.line.find(',');
    if (comma == std::string::npos) throw bcpw::ConfigError("line must be \"x1,x2\"");
    double x1 = 0.0, x2 = 0.0;
    try {
        x1 = std::stod(o.line.substr(0, comma));
        x2 = std::stod(o.line.substr(comma + 1));
    } catch (const std::exception&) {
        throw bcpw::ConfigError("line must be \"x1,x2\"");
    }
    const bcpw::HorizontalLine line = bcpw::make_line(x1, x2);

    const bcpw::ProductGrid tg = bcpw::make_grid(bcpw::DInterval::positive_line(), o.tn,
                                                 bcpw::Scheme::gauss_legendre, o.tmax);
    const bcpw::ProductGrid xg = bcpw::make_grid(bcpw::DInterval::both(-o.xmax, o.xmax), o.xn);
    const bcpw::SampledProductFunction rec = bcpw::recover(F, line, tg, xg);
    bcpw::write_samples_csv(rec, o.out);
    std::cout << "wrote " << rec.values1.size() << " recovered samples to " << o.out << "\n";
    return 0;
}

int run_band(const BandOpts& o) {
    require_positive(o.n, "n");
    bcpw::SampledProductFunction samples;
    double A = o.A;
    if (!o.density_csv.empty()) {
        if (!o.density.empty()) {
            throw bcpw::ConfigError("--density and --density-csv are mutually exclusive");
        }
        samples = bcpw::read_samples_csv(o.density_csv);
        if (A <= 0.0) {
            double extent = 0.0;
            for (double t : samples.grid.nodes1) extent = std::max(extent, std::abs(t));
            for (double t : samples.grid.nodes2) extent = std::max(extent, std::abs(t));
            A = std::max(1.0, extent);
        }
    } else {
        const std::string name = o.density.empty() ? "indicator" : o.density;
        if (A <= 0.0) {
            const double named = bcpw::indicator_band_limit(name);
            A = named > 0.0 ? named : 1.0;
        }
        samples = bcpw::sample_density(name, bcpw::make_grid(bcpw::DInterval::both(-A, A), o.n));
    }
    const bcpw::BandDensity density = bcpw::make_band_density(samples, A);
    std::cout << std::setprecision(12) << "exponential type constant C = "
              << bcpw::exponential_type_constant(density) << " (band limit A = " << A << ")\n";
    if (!o.point.empty()) {
        const std::vector<Bicomplex> pts = parse_point_list("", o.point, "");
        std::vector<Bicomplex> vals;
        vals.reserve(pts.size());
        for (const Bicomplex& Z : pts) vals.push_back(bcpw::band_synthesize(density, Z));
        emit_values(pts, vals, o.out);
    }
    return 0;
}

int run_cauchy(const CauchyOpts& o) {
    require_positive(o.n, "n");
    require_positive(o.T, "T");
    const bcpw::SampledProductFunction samples =
        cli_density(o.density, "rational_hardy", o.density_csv, [&] {
            return bcpw::make_grid(bcpw::DInterval::both(-o.T, o.T), o.n);
        });
    const std::vector<Bicomplex> pts = parse_point_list("", o.point, "");
    std::vector<Bicomplex> vals;
    vals.reserve(pts.size());
    for (const Bicomplex& Z : pts) vals.push_back(bcpw::cauchy_integral(samples, Z));
    emit_values(pts, vals, o.out);
    return 0;
}

int run_verify(const VerifyCliOpts& o) {
    bcpw::VerifyOptions vo;
    vo.seed = o.seed;
    vo.tol = o.tol;
    vo.density = o.density;
    vo.density_csv = o.density_csv;
    vo.n = o.n;
    vo.T = o.T;

    std::vector<std::string> selected;
    if (o.suite == "all") {
        selected = bcpw::suite_names();
    } else {
        selected.push_back(o.suite);
    }

    bool ok = true;
    std::vector<bcpw::ReportRow> rows;
    for (const std::string& name : selected) {
        const bcpw::SuiteResult res = bcpw::run_suite(name, vo);
        for (const bcpw::ReportRow& r : res.rows) {
            std::cout << "  [" << (r.pass ? "ok" : "!!") << "] " << r.test << " " << r.parameter
                      << ": c1=" << std::setprecision(6) << r.component1
                      << " c2=" << r.component2 << " bound=" << r.bound << "\n";
        }
        std::cout << (res.passed() ? "[PASS] " : "[FAIL] ") << res.suite << " ("
                  << res.rows.size() << " rows, " << std::fixed << std::setprecision(2)
                  << res.seconds << " s)\n"
                  << std::defaultfloat;
        ok = ok && res.passed();
        rows.insert(rows.end(), res.rows.begin(), res.rows.end());
    }
    if (!o.out.empty()) {
        bcpw::write_report_csv(rows, o.out);
        std::cout << "wrote " << rows.size() << " report rows to " << o.out << "\n";
    }
    return ok ? 0 : 1;
}

nlohmann::json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bcpw::ConfigError("cannot open config: " + path);
    nlohmann::json cfg;
    try {
        in >> cfg;
    } catch (const nlohmann::json::exception& e) {
        throw bcpw::ConfigError(std::string("config parse: ") + e.what());
    }
    if (!cfg.is_object()) throw bcpw::ConfigError("config must be a JSON object");
    return cfg;
}

bool flag_given(const CLI::App* cmd, std::string key) {
    std::replace(key.begin(), key.end(), '_', '-');
    const CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    return opt != nullptr && opt->count() > 0;
}

template <class T>
void merge_field(const CLI::App* cmd, const nlohmann::json& cfg, const std::string& key,
                 T& target) {
    if (!cfg.contains(key) || flag_given(cmd, key)) return;
    try {
        target = cfg.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw bcpw::ConfigError("config key '" + key + "': " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicomplex analysis toolkit: algebra, transforms, half-plane extensions,"
                 " band synthesis, Cauchy integrals, verification suites"};
    app.require_subcommand(0, 1);
    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON config; keys mirror the long flags (command selects the subcommand),"
                   " flags win on conflict");

    DecomposeOpts dec;
    TransformOpts tra;
    ExtendOpts ext;
    RecoverOpts rec;
    BandOpts ban;
    CauchyOpts cau;
    VerifyCliOpts ver;

    CLI::App* c_dec =
        app.add_subcommand("decompose", "idempotent decomposition of a bicomplex number");
    c_dec->add_option("--z", dec.z,
                      "bicomplex value, tuple \"x0,x1,x2,x3\" or text \"a + b i + c j + d k\"");
    c_dec->add_option("--config", config_path, "JSON config");

    CLI::App* c_tra =
        app.add_subcommand("transform", "quadrature Fourier transform of a product density");
    c_tra->add_option("--density", tra.density,
                      "named density: exp_decay | gaussian | indicator(A) | rational_hardy");
    c_tra->add_option("--density-csv", tra.density_csv, "density samples CSV");
    c_tra->add_option("--n", tra.n, "nodes per component")->check(CLI::PositiveNumber);
    c_tra->add_option("--T", tra.T, "grid half width")->check(CLI::PositiveNumber);
    c_tra->add_option("--scheme", tra.scheme, "gauss_legendre | trapezoid");
    c_tra->add_option("--prefactor", tra.prefactor, "forward prefactor")
        ->check(CLI::PositiveNumber);
    c_tra->add_option("--sign", tra.sign, "forward kernel sign")
        ->check(CLI::IsMember(std::set<int>{-1, 1}));
    c_tra->add_flag("--inverse", tra.inverse, "apply the inverse transform");
    c_tra->add_option("--points", tra.points, "real sweep lo:hi:count (default -5:5:50)");
    c_tra->add_option("--point", tra.point, "bicomplex evaluation point, repeatable");
    c_tra->add_option("--out", tra.out, "write values CSV instead of printing");
    c_tra->add_option("--config", config_path, "JSON config");

    CLI::App* c_ext =
        app.add_subcommand("extend", "half-plane extension of a positive-line density");
    c_ext->add_option("--density", ext.density, "named density (default exp_decay)");
    c_ext->add_option("--density-csv", ext.density_csv, "density samples CSV, nodes > 0");
    c_ext->add_option("--n", ext.n, "nodes per component")->check(CLI::PositiveNumber);
    c_ext->add_option("--T", ext.T, "density truncation")->check(CLI::PositiveNumber);
    c_ext->add_option("--point", ext.point, "upper-half-plane point, repeatable");
    c_ext->add_option("--out", ext.out, "write values CSV instead of printing");
    c_ext->add_option("--config", config_path, "JSON config");

    CLI::App* c_rec =
        app.add_subcommand("recover", "recover a density from one horizontal-line restriction");
    c_rec->add_option("--density", rec.density, "named density (default exp_decay)");
    c_rec->add_option("--density-csv", rec.density_csv, "density samples CSV, nodes > 0");
    c_rec->add_option("--n", rec.n, "density nodes per component")->check(CLI::PositiveNumber);
    c_rec->add_option("--T", rec.T, "density truncation")->check(CLI::PositiveNumber);
    c_rec->add_option("--line", rec.line, "horizontal line \"x1,x2\" with x1 > |x2|");
    c_rec->add_option("--tmax", rec.tmax, "recover on (0, tmax]")->check(CLI::PositiveNumber);
    c_rec->add_option("--tn", rec.tn, "t nodes")->check(CLI::PositiveNumber);
    c_rec->add_option("--xmax", rec.xmax, "line integral truncation")
        ->check(CLI::PositiveNumber);
    c_rec->add_option("--xn", rec.xn, "line integral nodes")->check(CLI::PositiveNumber);
    c_rec->add_option("--out", rec.out, "output samples CSV (default recovered.csv)");
    c_rec->add_option("--config", config_path, "JSON config");

    CLI::App* c_ban =
        app.add_subcommand("band", "band-limited synthesis and exponential-type constant");
    c_ban->add_option("--density", ban.density, "named density (default indicator)");
    c_ban->add_option("--density-csv", ban.density_csv, "density samples CSV");
    c_ban->add_option("--n", ban.n, "nodes per component")->check(CLI::PositiveNumber);
    c_ban->add_option("--A", ban.A, "band limit (default from density)")
        ->check(CLI::PositiveNumber);
    c_ban->add_option("--point", ban.point, "evaluation point, repeatable");
    c_ban->add_option("--out", ban.out, "write values CSV instead of printing");
    c_ban->add_option("--config", config_path, "JSON config");

    CLI::App* c_cau = app.add_subcommand("cauchy", "Cauchy integral of a boundary density");
    c_cau->add_option("--density", cau.density, "named boundary density (default rational_hardy)");
    c_cau->add_option("--density-csv", cau.density_csv, "boundary samples CSV");
    c_cau->add_option("--n", cau.n, "boundary nodes per component")->check(CLI::PositiveNumber);
    c_cau->add_option("--T", cau.T, "boundary truncation")->check(CLI::PositiveNumber);
    c_cau->add_option("--point", cau.point, "off-boundary point, repeatable");
    c_cau->add_option("--out", cau.out, "write values CSV instead of printing");
    c_cau->add_option("--config", config_path, "JSON config");

    CLI::App* c_ver = app.add_subcommand("verify", "run verification suites");
    c_ver->add_option("--suite", ver.suite,
                      "suite name or \"all\": algebra fourier_example plancherel energy recovery"
                      " contour exptype damped cauchy ray");
    c_ver->add_option("--density", ver.density, "density override (suite default otherwise)");
    c_ver->add_option("--density-csv", ver.density_csv, "density samples CSV override");
    c_ver->add_option("--n", ver.n, "grid size override")->check(CLI::PositiveNumber);
    c_ver->add_option("--T", ver.T, "truncation / band-limit override")
        ->check(CLI::PositiveNumber);
    c_ver->add_option("--tol", ver.tol, "headline tolerance override")
        ->check(CLI::PositiveNumber);
    c_ver->add_option("--seed", ver.seed, "seed for randomized property checks");
    c_ver->add_option("--out", ver.out, "write combined report CSV");
    c_ver->add_option("--config", config_path, "JSON config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const nlohmann::json cfg =
            config_path.empty() ? nlohmann::json::object() : load_config_file(config_path);

        std::string command;
        for (const CLI::App* sub : app.get_subcommands()) command = sub->get_name();
        if (command.empty()) {
            if (cfg.contains("command")) {
                command = cfg.at("command").get<std::string>();
            } else {
                std::cerr << app.help();
                return 2;
            }
        } else if (cfg.contains("command") && cfg.at("command").get<std::string>() != command) {
            throw bcpw::ConfigError("config command does not match the chosen subcommand");
        }

        if (command == "decompose") {
            merge_field(c_dec, cfg, "z", dec.z);
            return run_decompose(dec);
        }
        if (command == "transform") {
            merge_field(c_tra, cfg, "density", tra.density);
            merge_field(c_tra, cfg, "density_csv", tra.density_csv);
            merge_field(c_tra, cfg, "n", tra.n);
            merge_field(c_tra, cfg, "T", tra.T);
            merge_field(c_tra, cfg, "scheme", tra.scheme);
            merge_field(c_tra, cfg, "prefactor", tra.prefactor);
            merge_field(c_tra, cfg, "sign", tra.sign);
            merge_field(c_tra, cfg, "inverse", tra.inverse);
            merge_field(c_tra, cfg, "points", tra.points);
            merge_field(c_tra, cfg, "point", tra.point);
            merge_field(c_tra, cfg, "out", tra.out);
            return run_transform(tra);
        }
        if (command == "extend") {
            merge_field(c_ext, cfg, "density", ext.density);
            merge_field(c_ext, cfg, "density_csv", ext.density_csv);
            merge_field(c_ext, cfg, "n", ext.n);
            merge_field(c_ext, cfg, "T", ext.T);
            merge_field(c_ext, cfg, "point", ext.point);
            merge_field(c_ext, cfg, "out", ext.out);
            return run_extend(ext);
        }
        if (command == "recover") {
            merge_field(c_rec, cfg, "density", rec.density);
            merge_field(c_rec, cfg, "density_csv", rec.density_csv);
            merge_field(c_rec, cfg, "n", rec.n);
            merge_field(c_rec, cfg, "T", rec.T);
            merge_field(c_rec, cfg, "line", rec.line);
            merge_field(c_rec, cfg, "tmax", rec.tmax);
            merge_field(c_rec, cfg, "tn", rec.tn);
            merge_field(c_rec, cfg, "xmax", rec.xmax);
            merge_field(c_rec, cfg, "xn", rec.xn);
            merge_field(c_rec, cfg, "out", rec.out);
            return run_recover(rec);
        }
        if (command == "band") {
            merge_field(c_ban, cfg, "density", ban.density);
            merge_field(c_ban, cfg, "density_csv", ban.density_csv);
            merge_field(c_ban, cfg, "n", ban.n);
            merge_field(c_ban, cfg, "A", ban.A);
            merge_field(c_ban, cfg, "point", ban.point);
            merge_field(c_ban, cfg, "out", ban.out);
            return run_band(ban);
        }
        if (command == "cauchy") {
            merge_field(c_cau, cfg, "density", cau.density);
            merge_field(c_cau, cfg, "density_csv", cau.density_csv);
            merge_field(c_cau, cfg, "n", cau.n);
            merge_field(c_cau, cfg, "T", cau.T);
            merge_field(c_cau, cfg, "point", cau.point);
            merge_field(c_cau, cfg, "out", cau.out);
            return run_cauchy(cau);
        }
        if (command == "verify") {
            merge_field(c_ver, cfg, "suite", ver.suite);
            merge_field(c_ver, cfg, "density", ver.density);
            merge_field(c_ver, cfg, "density_csv", ver.density_csv);
            merge_field(c_ver, cfg, "n", ver.n);
            merge_field(c_ver, cfg, "T", ver.T);
            merge_field(c_ver, cfg, "tol", ver.tol);
            merge_field(c_ver, cfg, "seed", ver.seed);
            merge_field(c_ver, cfg, "out", ver.out);
            return run_verify(ver);
        }
        throw bcpw::ConfigError("unknown command: " + command);
    } catch (const bcpw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const bcpw::BadTruncationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const bcpw::OutOfDomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const bcpw::OnBoundaryError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
