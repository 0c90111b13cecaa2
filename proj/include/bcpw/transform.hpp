#pragma once

#include <utility>
#include <vector>

#include "bcpw/bicomplex.hpp"
#include "bcpw/quadrature.hpp"

namespace bcpw {

/// Normalization of the Fourier pair. The forward kernel is exp{sign * i t beta} with
/// prefactor forward_prefactor; the inverse kernel uses the opposite sign and the
/// prefactor 1 / (2 pi forward_prefactor), so the prefactor product is always 1/(2 pi).
struct TransformConvention {
    double forward_prefactor = 1.0 / (2.0 * 3.14159265358979323846);
    int sign = -1;

    double inverse_prefactor() const;
    void validate() const;  // forward_prefactor > 0 and sign in {-1, +1}
};

/// Partial sums whose magnitude exceeds this bound abort with DivergenceError.
inline constexpr double kGrowthGuard = 1e12;

/// Fourier transform of a sampled product function, evaluated at bicomplex points:
/// component i of the result at Z is prefactor * sum w_i f_i(t) exp{sign i t beta_i(Z)}.
std::vector<Bicomplex> bicomplex_fourier(const SampledProductFunction& F,
                                         const std::vector<Bicomplex>& points,
                                         const TransformConvention& conv = {});

/// Inverse transform (opposite kernel sign, complementary prefactor).
std::vector<Bicomplex> inverse_fourier(const SampledProductFunction& G,
                                       const std::vector<Bicomplex>& points,
                                       const TransformConvention& conv = {});

/// Plancherel pair: lhs = l2k_norm_squared(F); rhs = the l2k energy of the forward
/// transform over frequency_grid, normalized by 1/(2 pi forward_prefactor^2) so that
/// lhs == rhs in exact arithmetic for any convention.
std::pair<Hyperbolic, Hyperbolic> plancherel_check(const SampledProductFunction& F,
                                                   const ProductGrid& frequency_grid,
                                                   const TransformConvention& conv = {});

}  // namespace bcpw
