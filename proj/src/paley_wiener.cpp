#include "bcpw/paley_wiener.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "bcpw/transform.hpp"

namespace bcpw {

namespace {

constexpr Cplx kI(0.0, 1.0);

void check_finite(const std::vector<Cplx>& values, const char* where) {
    for (const Cplx& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NonFiniteError(std::string(where) + ": sample is not finite");
        }
    }
}

// Component closure t -> sum w_m f_m exp{i t_m beta} over one grid component.
std::function<Cplx(Cplx)> component_synthesis(std::shared_ptr<const SampledProductFunction> s,
                                              bool first) {
    return [s, first](Cplx beta) {
        const auto& nodes = first ? s->grid.nodes1 : s->grid.nodes2;
        const auto& weights = first ? s->grid.weights1 : s->grid.weights2;
        const auto& values = first ? s->values1 : s->values2;
        return pairwise_sum<Cplx>(0, values.size(), [&](std::size_t m) {
            return weights[m] * values[m] * std::exp(kI * nodes[m] * beta);
        });
    };
}

ProductFunction synthesis_closure(const SampledProductFunction& samples) {
    auto s = std::make_shared<const SampledProductFunction>(samples);
    return ProductFunction{component_synthesis(s, true), component_synthesis(s, false)};
}

}  // namespace

HalfPlaneDensity make_half_plane_density(SampledProductFunction samples) {
    for (const auto* nodes : {&samples.grid.nodes1, &samples.grid.nodes2}) {
        for (double t : *nodes) {
            if (!(t > 0.0)) {
                throw std::invalid_argument("half-plane density: grid nodes must be > 0");
            }
        }
    }
    check_finite(samples.values1, "half-plane density");
    check_finite(samples.values2, "half-plane density");
    return HalfPlaneDensity{std::move(samples)};
}

BandDensity make_band_density(SampledProductFunction samples, double band_limit) {
    if (!(band_limit > 0.0) || !std::isfinite(band_limit)) {
        throw std::invalid_argument("band density: band_limit must be positive and finite");
    }
    for (const auto* nodes : {&samples.grid.nodes1, &samples.grid.nodes2}) {
        for (double t : *nodes) {
            if (std::abs(t) > band_limit) {
                throw std::invalid_argument("band density: grid node outside the band");
            }
        }
    }
    check_finite(samples.values1, "band density");
    check_finite(samples.values2, "band density");
    return BandDensity{std::move(samples), band_limit};
}

HorizontalLine make_line(double x1, double x2) {
    if (!(x1 > std::abs(x2))) {
        throw std::invalid_argument("horizontal line requires x1 > |x2|");
    }
    return HorizontalLine{x1, x2};
}

Hyperbolic kernel_norm(double t, const Bicomplex& Z) {
    return Hyperbolic::from_components(std::exp(-t * (Z.x1() - Z.x2())),
                                       std::exp(-t * (Z.x1() + Z.x2())));
}

Bicomplex extend(const HalfPlaneDensity& density, const Bicomplex& Z) {
    if (!in_upper_half_plane(Z)) {
        throw OutOfDomainError("extend: point is not in the upper half plane");
    }
    const ProductFunction F = extension(density);
    return F(Z);
}

ProductFunction extension(const HalfPlaneDensity& density) {
    return synthesis_closure(density.samples);
}

Hyperbolic horizontal_line_energy(const ProductFunction& F, const HorizontalLine& line,
                                  const ProductGrid& x0_grid) {
    const double inv2pi = 1.0 / (2.0 * std::numbers::pi);
    const double s1 = inv2pi * pairwise_sum<double>(0, x0_grid.nodes1.size(), [&](std::size_t m) {
        return x0_grid.weights1[m] * std::norm(F.f1(Cplx(x0_grid.nodes1[m], line.y1())));
    });
    const double s2 = inv2pi * pairwise_sum<double>(0, x0_grid.nodes2.size(), [&](std::size_t m) {
        return x0_grid.weights2[m] * std::norm(F.f2(Cplx(x0_grid.nodes2[m], line.y2())));
    });
    return Hyperbolic::from_components(s1, s2);
}

Hyperbolic sup_energy(const ProductFunction& F, const std::vector<HorizontalLine>& lines,
                      const ProductGrid& x0_grid) {
    if (lines.empty()) throw std::invalid_argument("sup_energy: empty line family");
    double s1 = -std::numeric_limits<double>::infinity();
    double s2 = s1;
    for (const HorizontalLine& line : lines) {
        const Hyperbolic energy = horizontal_line_energy(F, line, x0_grid);
        s1 = std::max(s1, energy.s1());
        s2 = std::max(s2, energy.s2());
    }
    return Hyperbolic::from_components(s1, s2);
}

SampledProductFunction recover(const ProductFunction& F, const HorizontalLine& line,
                               const ProductGrid& t_grid, const ProductGrid& x0_grid) {
    const double inv2pi = 1.0 / (2.0 * std::numbers::pi);
    SampledProductFunction out;
    out.grid = t_grid;

    const auto recover_component = [&](const std::function<Cplx(Cplx)>& f, double height,
                                       const std::vector<double>& t_nodes,
                                       const std::vector<double>& x_nodes,
                                       const std::vector<double>& x_weights,
                                       std::vector<Cplx>& values) {
        std::vector<Cplx> restriction(x_nodes.size());
        for (std::size_t m = 0; m < x_nodes.size(); ++m) {
            restriction[m] = x_weights[m] * f(Cplx(x_nodes[m], height));
        }
        values.reserve(t_nodes.size());
        for (double t : t_nodes) {
            const Cplx hat = pairwise_sum<Cplx>(0, restriction.size(), [&](std::size_t m) {
                return restriction[m] * std::exp(Cplx(0.0, -t * x_nodes[m]));
            });
            values.push_back(std::exp(t * height) * inv2pi * hat);
        }
    };

    recover_component(F.f1, line.y1(), t_grid.nodes1, x0_grid.nodes1, x0_grid.weights1,
                      out.values1);
    recover_component(F.f2, line.y2(), t_grid.nodes2, x0_grid.nodes2, x0_grid.weights2,
                      out.values2);
    return out;
}

namespace {

Bicomplex contour_impl(const ProductFunction& F, double t, const ContourRect& rect,
                       int nodes_per_edge, bool conjugate_values) {
    if (!(rect.y > 1.0)) throw std::invalid_argument("contour rectangle requires y > 1");
    if (!(rect.alpha > 0.0)) throw std::invalid_argument("contour rectangle requires alpha > 0");
    const ProductGrid unit = make_grid(DInterval::both(0.0, 1.0), nodes_per_edge);

    const auto component = [&](const std::function<Cplx(Cplx)>& f) {
        const Cplx corners[4] = {Cplx(-rect.alpha, 1.0), Cplx(rect.alpha, 1.0),
                                 Cplx(rect.alpha, rect.y), Cplx(-rect.alpha, rect.y)};
        Cplx total(0.0, 0.0);
        for (int edge = 0; edge < 4; ++edge) {
            const Cplx P = corners[edge];
            const Cplx Q = corners[(edge + 1) % 4];
            const Cplx dir = Q - P;
            total += dir * pairwise_sum<Cplx>(0, unit.nodes1.size(), [&](std::size_t m) {
                const Cplx beta = P + unit.nodes1[m] * dir;
                Cplx val = f(beta);
                if (conjugate_values) val = std::conj(val);
                return unit.weights1[m] * val * std::exp(-kI * t * beta);
            });
        }
        return total;
    };

    return Bicomplex::from_idempotent(component(F.f1), component(F.f2));
}

}  // namespace

Bicomplex rectangle_contour_integral(const ProductFunction& F, double t, const ContourRect& rect,
                                     int nodes_per_edge) {
    return contour_impl(F, t, rect, nodes_per_edge, false);
}

Bicomplex rectangle_contour_integral_conjugated(const ProductFunction& F, double t,
                                                const ContourRect& rect, int nodes_per_edge) {
    return contour_impl(F, t, rect, nodes_per_edge, true);
}

Bicomplex band_synthesize(const BandDensity& density, const Bicomplex& Z) {
    const ProductFunction F = band_extension(density);
    return F(Z);
}

ProductFunction band_extension(const BandDensity& density) {
    return synthesis_closure(density.samples);
}

double exponential_type_constant(const BandDensity& density) {
    const auto& s = density.samples;
    const double m1 = pairwise_sum<double>(0, s.values1.size(), [&](std::size_t m) {
        return s.grid.weights1[m] * std::abs(s.values1[m]);
    });
    const double m2 = pairwise_sum<double>(0, s.values2.size(), [&](std::size_t m) {
        return s.grid.weights2[m] * std::abs(s.values2[m]);
    });
    return std::sqrt(2.0) * std::max(m1, m2);
}

Tristate exponential_type_check(const BandDensity& density, double C, const Bicomplex& Z) {
    const Hyperbolic lhs = hyperbolic_norm(band_synthesize(density, Z));
    const Hyperbolic rhs = C * exp_d(density.band_limit * hyperbolic_norm(Z));
    return leq(lhs, rhs);
}

Bicomplex epsilon_damped_transform(const SampledProductFunction& boundary, const Hyperbolic& eps,
                                   const Hyperbolic& t) {
    if (!(eps.s1() > 0.0) || !(eps.s2() > 0.0)) {
        throw std::invalid_argument("epsilon_damped_transform: eps components must be > 0");
    }
    check_finite(boundary.values1, "epsilon_damped_transform");
    check_finite(boundary.values2, "epsilon_damped_transform");

    const auto component = [](const std::vector<double>& nodes,
                              const std::vector<double>& weights,
                              const std::vector<Cplx>& values, double eps_c, double t_c) {
        return pairwise_sum<Cplx>(0, values.size(), [&](std::size_t m) {
            const double u = nodes[m];
            return weights[m] * values[m] * std::exp(-eps_c * std::abs(u)) *
                   std::exp(Cplx(0.0, -t_c * u));
        });
    };

    const Cplx i1 = component(boundary.grid.nodes1, boundary.grid.weights1, boundary.values1,
                              eps.s1(), t.s1());
    const Cplx i2 = component(boundary.grid.nodes2, boundary.grid.weights2, boundary.values2,
                              eps.s2(), t.s2());
    return Bicomplex::from_idempotent(i1, i2);
}

Bicomplex ray_transform(const ProductFunction& F, double alpha, const Bicomplex& W,
                        const ProductGrid& u_grid) {
    const Cplx dir(std::cos(alpha), std::sin(alpha));

    const auto component = [&](const std::function<Cplx(Cplx)>& f, Cplx w,
                               const std::vector<double>& nodes,
                               const std::vector<double>& weights) {
        return dir * guarded_pairwise_sum(
                         0, nodes.size(),
                         [&](std::size_t m) {
                             const Cplx z = nodes[m] * dir;
                             return weights[m] * f(z) * std::exp(-w * z);
                         },
                         kGrowthGuard);
    };

    const Cplx i1 = component(F.f1, W.beta1(), u_grid.nodes1, u_grid.weights1);
    const Cplx i2 = component(F.f2, W.beta2(), u_grid.nodes2, u_grid.weights2);
    return Bicomplex::from_idempotent(i1, i2);
}

}  // namespace bcpw
