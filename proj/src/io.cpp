#include "bcpw/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace bcpw {

namespace {

// Shortest round-trip decimal formatting; normalizes -0 to 0.
std::string fmt(double v) {
    if (v == 0.0) return "0";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
        if (used != s.size()) throw ConfigError(std::string("trailing characters in ") + what);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(std::string("malformed ") + what + ": " + s);
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    return out;
}

}  // namespace

std::string to_text(const Bicomplex& Z) {
    std::string s = fmt(Z.x0());
    const double coeff[3] = {Z.x1(), Z.x2(), Z.x3()};
    const char* unit[3] = {"i", "j", "k"};
    for (int m = 0; m < 3; ++m) {
        const double c = coeff[m];
        s += (c < 0.0 ? " - " : " + ");
        s += fmt(std::abs(c));
        s += " ";
        s += unit[m];
    }
    return s;
}

Bicomplex parse_bicomplex(const std::string& text) {
    if (text.find(',') != std::string::npos) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : text) {
            if (c == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        if (parts.size() != 4) throw ConfigError("bicomplex tuple needs 4 components: " + text);
        return Bicomplex(parse_double(parts[0], "x0"), parse_double(parts[1], "x1"),
                         parse_double(parts[2], "x2"), parse_double(parts[3], "x3"));
    }

    // Text form: signed terms, each an optional coefficient with an optional unit i/j/k.
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw ConfigError("empty bicomplex literal");

    double x[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t pos = 0;
    while (pos < s.size()) {
        double sign = 1.0;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= s.size()) throw ConfigError("dangling sign in bicomplex literal: " + text);
        // Term runs until the next +/- that does not follow an exponent marker.
        const std::size_t start = pos;
        while (pos < s.size()) {
            const char c = s[pos];
            if ((c == '+' || c == '-') && pos > start) {
                const char prev = s[pos - 1];
                if (prev != 'e' && prev != 'E') break;
            }
            ++pos;
        }
        std::string term = s.substr(start, pos - start);
        int axis = 0;
        const char last = term.back();
        if (last == 'i' || last == 'j' || last == 'k') {
            axis = (last == 'i') ? 1 : (last == 'j' ? 2 : 3);
            term.pop_back();
        }
        double mag = 1.0;
        if (!term.empty()) {
            if (term == "*") throw ConfigError("malformed bicomplex term: " + text);
            if (term.back() == '*') term.pop_back();
            mag = parse_double(term, "bicomplex coefficient");
        } else if (axis == 0) {
            throw ConfigError("malformed bicomplex term in: " + text);
        }
        x[axis] += sign * mag;
    }
    return Bicomplex(x[0], x[1], x[2], x[3]);
}

std::string format_complex(Cplx value) {
    const double re = value.real() == 0.0 ? 0.0 : value.real();
    const double im = value.imag() == 0.0 ? 0.0 : value.imag();
    std::string s = fmt(re);
    s += (im < 0.0 ? " - " : " + ");
    s += fmt(std::abs(im));
    s += " i";
    return s;
}

void write_samples_csv(const SampledProductFunction& F, const std::string& path) {
    if (F.grid.nodes1.size() != F.grid.nodes2.size()) {
        throw std::invalid_argument("samples CSV requires equal component lengths");
    }
    auto out = open_out(path);
    out << "t1,f1_re,f1_im,t2,f2_re,f2_im\n";
    for (std::size_t m = 0; m < F.grid.nodes1.size(); ++m) {
        out << fmt(F.grid.nodes1[m]) << ',' << fmt(F.values1[m].real()) << ','
            << fmt(F.values1[m].imag()) << ',' << fmt(F.grid.nodes2[m]) << ','
            << fmt(F.values2[m].real()) << ',' << fmt(F.values2[m].imag()) << '\n';
    }
}

namespace {

// Non-uniform trapezoid weights for externally supplied sample nodes.
std::vector<double> trapezoid_weights(const std::vector<double>& nodes) {
    const std::size_t n = nodes.size();
    std::vector<double> w(n, 0.0);
    if (n == 1) {
        w[0] = 1.0;  // a single sample acts as a point mass
        return w;
    }
    for (std::size_t m = 0; m < n; ++m) {
        const double left = (m == 0) ? nodes[0] : nodes[m - 1];
        const double right = (m == n - 1) ? nodes[n - 1] : nodes[m + 1];
        w[m] = 0.5 * (right - left);
    }
    return w;
}

}  // namespace

SampledProductFunction read_samples_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open samples CSV: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("t1,f1_re,f1_im,t2,f2_re,f2_im", 0) != 0) {
        throw ConfigError("samples CSV must start with header t1,f1_re,f1_im,t2,f2_re,f2_im");
    }
    SampledProductFunction F;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                cells.push_back(cur);
                cur.clear();
            } else if (c != '\r') {
                cur += c;
            }
        }
        cells.push_back(cur);
        if (cells.size() != 6) {
            throw ConfigError("samples CSV row " + std::to_string(lineno) + " needs 6 cells");
        }
        F.grid.nodes1.push_back(parse_double(cells[0], "t1"));
        F.values1.emplace_back(parse_double(cells[1], "f1_re"), parse_double(cells[2], "f1_im"));
        F.grid.nodes2.push_back(parse_double(cells[3], "t2"));
        F.values2.emplace_back(parse_double(cells[4], "f2_re"), parse_double(cells[5], "f2_im"));
    }
    if (F.grid.nodes1.empty()) throw ConfigError("samples CSV has no data rows: " + path);
    for (const auto* nodes : {&F.grid.nodes1, &F.grid.nodes2}) {
        for (std::size_t m = 1; m < nodes->size(); ++m) {
            if (!((*nodes)[m] > (*nodes)[m - 1])) {
                throw ConfigError("samples CSV nodes must be strictly increasing");
            }
        }
    }
    F.grid.weights1 = trapezoid_weights(F.grid.nodes1);
    F.grid.weights2 = trapezoid_weights(F.grid.nodes2);
    return F;
}

std::string grid_config_to_json(const DInterval& interval, int n, Scheme scheme,
                                double truncation) {
    nlohmann::json j;
    const auto bound = [](double v) -> nlohmann::json {
        if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
        return v;
    };
    j["interval"] = {bound(interval.lo1), bound(interval.hi1), bound(interval.lo2),
                     bound(interval.hi2)};
    j["n"] = n;
    j["scheme"] = to_string(scheme);
    j["truncation"] = truncation;
    return j.dump();
}

GridConfig grid_config_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("grid config is not valid JSON: ") + e.what());
    }
    const auto bound = [](const nlohmann::json& v) -> double {
        if (v.is_string()) {
            const std::string s = v.get<std::string>();
            if (s == "inf") return std::numeric_limits<double>::infinity();
            if (s == "-inf") return -std::numeric_limits<double>::infinity();
            throw ConfigError("grid interval bound must be a number, \"inf\" or \"-inf\"");
        }
        if (!v.is_number()) throw ConfigError("grid interval bound must be a number");
        return v.get<double>();
    };
    try {
        const auto& iv = j.at("interval");
        if (!iv.is_array() || iv.size() != 4) {
            throw ConfigError("grid config: interval must be an array of 4 bounds");
        }
        GridConfig cfg{DInterval{bound(iv[0]), bound(iv[1]), bound(iv[2]), bound(iv[3])},
                       j.at("n").get<int>(), scheme_from_string(j.at("scheme").get<std::string>()),
                       j.value("truncation", 0.0)};
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("grid config: ") + e.what());
    }
}

void write_report_csv(const std::vector<ReportRow>& rows, const std::string& path) {
    auto out = open_out(path);
    out << "test,parameter,component1_value,component2_value,bound,pass\n";
    for (const ReportRow& r : rows) {
        out << r.test << ',' << r.parameter << ',' << fmt(r.component1) << ','
            << fmt(r.component2) << ',' << fmt(r.bound) << ',' << (r.pass ? "pass" : "fail")
            << '\n';
    }
}

void write_values_csv(const std::vector<Bicomplex>& points, const std::vector<Bicomplex>& values,
                      const std::string& path) {
    if (points.size() != values.size()) {
        throw std::invalid_argument("write_values_csv: points and values differ in length");
    }
    auto out = open_out(path);
    out << "x0,x1,x2,x3,re_beta1,im_beta1,re_beta2,im_beta2\n";
    for (std::size_t m = 0; m < points.size(); ++m) {
        const Cplx b1 = values[m].beta1();
        const Cplx b2 = values[m].beta2();
        out << fmt(points[m].x0()) << ',' << fmt(points[m].x1()) << ',' << fmt(points[m].x2())
            << ',' << fmt(points[m].x3()) << ',' << fmt(b1.real()) << ',' << fmt(b1.imag())
            << ',' << fmt(b2.real()) << ',' << fmt(b2.imag()) << '\n';
    }
}

}  // namespace bcpw
