#include "bcpw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bcpw {

Scheme scheme_from_string(const std::string& name) {
    if (name == "trapezoid") return Scheme::trapezoid;
    if (name == "gauss_legendre") return Scheme::gauss_legendre;
    throw ConfigError("unknown scheme: " + name);
}

std::string to_string(Scheme scheme) {
    return scheme == Scheme::trapezoid ? "trapezoid" : "gauss_legendre";
}

DInterval DInterval::real_line() {
    const double inf = std::numeric_limits<double>::infinity();
    return both(-inf, inf);
}

DInterval DInterval::positive_line() {
    const double inf = std::numeric_limits<double>::infinity();
    return both(0.0, inf);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_rule(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_rule: n must be >= 1");
    std::vector<double> nodes(n), weights(n);
    // Newton iteration on P_n with the three-term recurrence; roots are symmetric.
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int m = 2; m <= n; ++m) {
                const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // One more recurrence pass at the converged root for the weight.
        double p0 = 1.0, p1 = x;
        for (int m = 2; m <= n; ++m) {
            const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[k] = -x;  // k-th root from the cos seed is the largest; mirror to ascend
        nodes[n - 1 - k] = x;
        weights[k] = w;
        weights[n - 1 - k] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
    return {nodes, weights};
}

namespace {

void fill_component(double lo, double hi, int n, Scheme scheme, double truncation,
                    std::vector<double>& nodes, std::vector<double>& weights) {
    const bool lo_inf = std::isinf(lo);
    const bool hi_inf = std::isinf(hi);
    if (lo_inf || hi_inf) {
        if (!(truncation > 0.0)) {
            throw BadTruncationError("make_grid: infinite bound requires truncation > 0");
        }
        if (lo_inf) lo = -truncation;
        if (hi_inf) hi = truncation;
    }
    if (!(lo < hi)) throw std::invalid_argument("make_grid: interval bounds must satisfy lo < hi");

    nodes.clear();
    weights.clear();
    if (scheme == Scheme::trapezoid) {
        if (n < 2) throw std::invalid_argument("make_grid: trapezoid needs n >= 2");
        const double h = (hi - lo) / (n - 1);
        nodes.reserve(n);
        weights.reserve(n);
        for (int m = 0; m < n; ++m) {
            nodes.push_back(m == n - 1 ? hi : lo + m * h);
            weights.push_back((m == 0 || m == n - 1) ? 0.5 * h : h);
        }
        return;
    }

    if (n < 1) throw std::invalid_argument("make_grid: gauss_legendre needs n >= 1");
    const int panel_size = std::min(n, 16);
    const int panels = (n + panel_size - 1) / panel_size;
    const auto [ref_nodes, ref_weights] = gauss_legendre_rule(panel_size);
    nodes.reserve(static_cast<std::size_t>(panels) * panel_size);
    weights.reserve(static_cast<std::size_t>(panels) * panel_size);
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * width;
        const double mid = a + 0.5 * width;
        const double half = 0.5 * width;
        for (int m = 0; m < panel_size; ++m) {
            nodes.push_back(mid + half * ref_nodes[m]);
            weights.push_back(half * ref_weights[m]);
        }
    }
}

void check_finite(const std::vector<Cplx>& values, const char* where) {
    for (const Cplx& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NonFiniteError(std::string(where) + ": sample is not finite");
        }
    }
}

}  // namespace

ProductGrid make_grid(const DInterval& interval, int n, Scheme scheme, double truncation) {
    ProductGrid grid;
    grid.truncation = truncation;
    fill_component(interval.lo1, interval.hi1, n, scheme, truncation, grid.nodes1,
                   grid.weights1);
    fill_component(interval.lo2, interval.hi2, n, scheme, truncation, grid.nodes2,
                   grid.weights2);
    return grid;
}

SampledProductFunction sample(const ProductGrid& grid, const std::function<Cplx(double)>& f1,
                              const std::function<Cplx(double)>& f2) {
    SampledProductFunction F;
    F.grid = grid;
    F.values1.reserve(grid.nodes1.size());
    for (double t : grid.nodes1) F.values1.push_back(f1(t));
    F.values2.reserve(grid.nodes2.size());
    for (double t : grid.nodes2) F.values2.push_back(f2(t));
    return F;
}

SampledProductFunction sample(const ProductGrid& grid, const std::function<Cplx(double)>& f) {
    return sample(grid, f, f);
}

Bicomplex d_integral(const SampledProductFunction& F) {
    check_finite(F.values1, "d_integral");
    check_finite(F.values2, "d_integral");
    const Cplx i1 = pairwise_sum<Cplx>(
        0, F.values1.size(), [&](std::size_t m) { return F.grid.weights1[m] * F.values1[m]; });
    const Cplx i2 = pairwise_sum<Cplx>(
        0, F.values2.size(), [&](std::size_t m) { return F.grid.weights2[m] * F.values2[m]; });
    return Bicomplex::from_idempotent(i1, i2);
}

Hyperbolic l2k_norm_squared(const SampledProductFunction& F) {
    check_finite(F.values1, "l2k_norm_squared");
    check_finite(F.values2, "l2k_norm_squared");
    const double s1 = pairwise_sum<double>(
        0, F.values1.size(), [&](std::size_t m) { return F.grid.weights1[m] * std::norm(F.values1[m]); });
    const double s2 = pairwise_sum<double>(
        0, F.values2.size(), [&](std::size_t m) { return F.grid.weights2[m] * std::norm(F.values2[m]); });
    return Hyperbolic::from_components(s1, s2);
}

}  // namespace bcpw
