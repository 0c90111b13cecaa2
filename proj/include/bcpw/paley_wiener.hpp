#pragma once

#include <functional>
#include <vector>

#include "bcpw/bicomplex.hpp"
#include "bcpw/quadrature.hpp"

namespace bcpw {

/// Product-type function F = e f1(beta1) + e~ f2(beta2) given by per-component closures.
struct ProductFunction {
    std::function<Cplx(Cplx)> f1, f2;

    Bicomplex operator()(const Bicomplex& Z) const {
        return Bicomplex::from_idempotent(f1(Z.beta1()), f2(Z.beta2()));
    }
};

/// Density on the positive half line, sampled per component; all grid nodes must be > 0.
struct HalfPlaneDensity {
    SampledProductFunction samples;
};

/// Validated constructor. Throws std::invalid_argument when a node is <= 0,
/// NonFiniteError when a sample is not finite.
HalfPlaneDensity make_half_plane_density(SampledProductFunction samples);

/// Band-limited density supported on (-band_limit, band_limit), sampled per component.
struct BandDensity {
    SampledProductFunction samples;
    double band_limit = 1.0;
};

BandDensity make_band_density(SampledProductFunction samples, double band_limit);

/// Horizontal line {x0 + i x1 + j x2 + k x3 : x0, x3 real} with fixed x1 > |x2|.
/// Component heights: beta1 runs at Im beta1 = x1 - x2, beta2 at Im beta2 = x1 + x2.
struct HorizontalLine {
    double x1, x2;
    double y1() const { return x1 - x2; }
    double y2() const { return x1 + x2; }
};

HorizontalLine make_line(double x1, double x2);  // throws when x1 <= |x2|

/// Rectangle contour with vertices +-alpha + i and +-alpha + i y per component (y > 1).
struct ContourRect {
    double alpha;
    double y;
};

/// Hyperbolic norm of the kernel exp{i t Z}: s-components
/// (exp{-t (x1 - x2)}, exp{-t (x1 + x2)}).
Hyperbolic kernel_norm(double t, const Bicomplex& Z);

/// Half-plane extension F(Z) = e int f1(t) e^{i t beta1} dt + e~ int f2(t) e^{i t beta2} dt
/// over the density's grid. Throws OutOfDomainError when Z is not in the upper half plane.
Bicomplex extend(const HalfPlaneDensity& density, const Bicomplex& Z);

/// The same extension as a per-component closure (no domain guard; components may be
/// evaluated anywhere the quadrature converges).
ProductFunction extension(const HalfPlaneDensity& density);

/// Energy of the restriction of F to a horizontal line:
/// s-component i is (1/2pi) int |f_i(x + i y_i)|^2 dx over x0_grid component i.
Hyperbolic horizontal_line_energy(const ProductFunction& F, const HorizontalLine& line,
                                  const ProductGrid& x0_grid);

/// Componentwise supremum of line energies over a family of lines.
Hyperbolic sup_energy(const ProductFunction& F, const std::vector<HorizontalLine>& lines,
                      const ProductGrid& x0_grid);

/// Recover the density from one horizontal-line restriction:
/// component i at node t is exp{t y_i} (1/2pi) int f_i(x + i y_i) e^{-i t x} dx.
/// Returns the recovered samples on t_grid. The result is line-independent in exact
/// arithmetic; with truncated quadrature the weight exp{t y_i} amplifies the truncation
/// error of the x integral, so accuracy degrades as t y_i grows.
SampledProductFunction recover(const ProductFunction& F, const HorizontalLine& line,
                               const ProductGrid& t_grid, const ProductGrid& x0_grid);

/// Closed rectangle contour integral, componentwise, of f_i(beta) e^{-i t beta} d beta.
/// Zero for holomorphic integrands by Cauchy's theorem.
Bicomplex rectangle_contour_integral(const ProductFunction& F, double t,
                                     const ContourRect& rect, int nodes_per_edge = 256);

/// Same contour integral with each component replaced by its complex conjugate
/// (deliberately non-holomorphic negative control).
Bicomplex rectangle_contour_integral_conjugated(const ProductFunction& F, double t,
                                                const ContourRect& rect,
                                                int nodes_per_edge = 256);

/// Band synthesis F(Z) = int over (-A, A) of the density against e^{i t beta},
/// componentwise over the density's grid.
Bicomplex band_synthesize(const BandDensity& density, const Bicomplex& Z);

/// Band synthesis as a per-component closure.
ProductFunction band_extension(const BandDensity& density);

/// Exponential-type constant C = sqrt(2) * max_i int |f_i(t)| dt over the density grid.
double exponential_type_constant(const BandDensity& density);

/// leq comparison of ||F(Z)||_k against C exp{A ||Z||_k} (componentwise).
Tristate exponential_type_check(const BandDensity& density, double C, const Bicomplex& Z);

/// Damped transform of boundary samples: component i is
/// int F_i(u) exp{-eps_i |u|} exp{-i t_i u} du. Requires eps components > 0.
Bicomplex epsilon_damped_transform(const SampledProductFunction& boundary,
                                   const Hyperbolic& eps, const Hyperbolic& t);

/// Ray transform along u -> u e^{i alpha}, u >= 0:
/// component i is e^{i alpha} int f_i(u e^{i alpha}) exp{-W_i u e^{i alpha}} du over
/// u_grid. Growth-guarded; throws DivergenceError when partial sums blow up.
Bicomplex ray_transform(const ProductFunction& F, double alpha, const Bicomplex& W,
                        const ProductGrid& u_grid);

}  // namespace bcpw
