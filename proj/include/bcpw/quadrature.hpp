#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bcpw/bicomplex.hpp"
#include "bcpw/errors.hpp"

namespace bcpw {

enum class Scheme { trapezoid, gauss_legendre };

Scheme scheme_from_string(const std::string& name);
std::string to_string(Scheme scheme);

/// Pair of real intervals addressed by idempotent component.
/// Bounds may be +-infinity; such intervals must be truncated by make_grid.
struct DInterval {
    double lo1, hi1;
    double lo2, hi2;

    /// Same interval in both components.
    static DInterval both(double lo, double hi) { return {lo, hi, lo, hi}; }
    static DInterval real_line();       // (-inf, inf) in both components
    static DInterval positive_line();   // (0, inf) in both components
};

/// Quadrature nodes and nonnegative weights per idempotent component.
/// Nodes are strictly increasing within each component.
struct ProductGrid {
    std::vector<double> nodes1, weights1;
    std::vector<double> nodes2, weights2;
    double truncation = 0.0;  // 0 when no infinite bound was truncated
};

/// Build a product quadrature grid with a budget of n nodes per component.
/// Infinite bounds are replaced by -truncation / +truncation (BadTruncationError when
/// truncation <= 0 is supplied for an infinite bound). For gauss_legendre the budget is
/// filled with 16-node panels (a single n-node panel when n <= 16), so the actual node
/// count rounds up to a whole number of panels. Deterministic for fixed inputs.
ProductGrid make_grid(const DInterval& interval, int n, Scheme scheme = Scheme::gauss_legendre,
                      double truncation = 0.0);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], ascending.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_rule(int n);

/// Product-type function F = e f1 + e~ f2 sampled on a grid, componentwise.
struct SampledProductFunction {
    ProductGrid grid;
    std::vector<Cplx> values1, values2;
};

/// Sample scalar profiles on a grid (component i gets fi at nodes_i).
SampledProductFunction sample(const ProductGrid& grid, const std::function<Cplx(double)>& f1,
                              const std::function<Cplx(double)>& f2);

/// Same profile in both components.
SampledProductFunction sample(const ProductGrid& grid, const std::function<Cplx(double)>& f);

/// D-integral: e * sum(w1 f1) + e~ * sum(w2 f2), each component summed pairwise in
/// ascending node order. Throws NonFiniteError when any sample is NaN or infinite.
Bicomplex d_integral(const SampledProductFunction& F);

/// Hyperbolic-valued squared l2 norm: s-components (sum w1 |f1|^2, sum w2 |f2|^2).
Hyperbolic l2k_norm_squared(const SampledProductFunction& F);

/// Deterministic pairwise summation of term(lo), ..., term(hi - 1).
template <class T, class Term>
T pairwise_sum(std::size_t lo, std::size_t hi, Term&& term) {
    if (hi - lo <= 8) {
        T acc = T();
        for (std::size_t m = lo; m < hi; ++m) acc += term(m);
        return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum<T>(lo, mid, term) + pairwise_sum<T>(mid, hi, term);
}

/// Pairwise summation that aborts with DivergenceError when any partial sum leaves
/// the disk of radius guard or stops being finite.
template <class Term>
Cplx guarded_pairwise_sum(std::size_t lo, std::size_t hi, Term&& term, double guard) {
    Cplx acc;
    if (hi - lo <= 8) {
        acc = Cplx();
        for (std::size_t m = lo; m < hi; ++m) acc += term(m);
    } else {
        const std::size_t mid = lo + (hi - lo) / 2;
        acc = guarded_pairwise_sum(lo, mid, term, guard) +
              guarded_pairwise_sum(mid, hi, term, guard);
    }
    const double mag = std::abs(acc);
    if (!(mag <= guard)) {
        throw DivergenceError("partial sum exceeded growth guard");
    }
    return acc;
}

}  // namespace bcpw
