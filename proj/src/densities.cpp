#include "bcpw/densities.hpp"

#include <cmath>

namespace bcpw {

namespace {

bool is_indicator(const std::string& name) { return name.rfind("indicator", 0) == 0; }

double parse_indicator_limit(const std::string& name) {
    if (name == "indicator") return 1.0;
    if (name.size() > 10 && name[9] == '(' && name.back() == ')') {
        const std::string arg = name.substr(10, name.size() - 11);
        try {
            std::size_t used = 0;
            const double A = std::stod(arg, &used);
            if (used == arg.size() && A > 0.0 && std::isfinite(A)) return A;
        } catch (const std::exception&) {
        }
    }
    throw ConfigError("malformed indicator density: " + name);
}

}  // namespace

double indicator_band_limit(const std::string& name) {
    return is_indicator(name) ? parse_indicator_limit(name) : 0.0;
}

std::function<Cplx(double)> density_profile(const std::string& name) {
    if (name == "exp_decay") {
        return [](double t) { return Cplx(std::exp(-std::abs(t)), 0.0); };
    }
    if (name == "gaussian") {
        return [](double t) { return Cplx(std::exp(-0.5 * t * t), 0.0); };
    }
    if (is_indicator(name)) {
        const double A = parse_indicator_limit(name);
        return [A](double t) { return Cplx(std::abs(t) < A ? 1.0 : 0.0, 0.0); };
    }
    if (name == "rational_hardy") {
        return [](double w) {
            const Cplx d(w, 1.0);  // w + i
            return 1.0 / (d * d);
        };
    }
    throw ConfigError("unknown density: " + name);
}

std::function<Cplx(double)> rational_hardy_pair() {
    return [](double w) { return 1.0 / (Cplx(w, 1.0) * Cplx(w, 2.0)); };
}

SampledProductFunction sample_density(const std::string& name, const ProductGrid& grid) {
    return sample(grid, density_profile(name));
}

}  // namespace bcpw
