#include "bcpw/transform.hpp"

#include <cmath>
#include <numbers>

namespace bcpw {

double TransformConvention::inverse_prefactor() const {
    return 1.0 / (2.0 * std::numbers::pi * forward_prefactor);
}

void TransformConvention::validate() const {
    if (!(forward_prefactor > 0.0) || !std::isfinite(forward_prefactor)) {
        throw ConfigError("TransformConvention: forward_prefactor must be positive and finite");
    }
    if (sign != 1 && sign != -1) {
        throw ConfigError("TransformConvention: sign must be +1 or -1");
    }
}

namespace {

void check_finite(const std::vector<Cplx>& values, const char* where) {
    for (const Cplx& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NonFiniteError(std::string(where) + ": sample is not finite");
        }
    }
}

// Component transform prefactor * sum w_m f_m exp{kernel_sign i t_m beta}, guarded.
Cplx component_transform(const std::vector<double>& nodes, const std::vector<double>& weights,
                         const std::vector<Cplx>& values, Cplx beta, int kernel_sign,
                         double prefactor) {
    const Cplx rot = Cplx(0.0, static_cast<double>(kernel_sign)) * beta;
    const Cplx s = guarded_pairwise_sum(
        0, values.size(),
        [&](std::size_t m) { return weights[m] * values[m] * std::exp(nodes[m] * rot); },
        kGrowthGuard);
    return prefactor * s;
}

std::vector<Bicomplex> transform_impl(const SampledProductFunction& F,
                                      const std::vector<Bicomplex>& points, int kernel_sign,
                                      double prefactor) {
    check_finite(F.values1, "transform");
    check_finite(F.values2, "transform");
    std::vector<Bicomplex> out;
    out.reserve(points.size());
    for (const Bicomplex& Z : points) {
        const Cplx g1 = component_transform(F.grid.nodes1, F.grid.weights1, F.values1,
                                            Z.beta1(), kernel_sign, prefactor);
        const Cplx g2 = component_transform(F.grid.nodes2, F.grid.weights2, F.values2,
                                            Z.beta2(), kernel_sign, prefactor);
        out.push_back(Bicomplex::from_idempotent(g1, g2));
    }
    return out;
}

}  // namespace

std::vector<Bicomplex> bicomplex_fourier(const SampledProductFunction& F,
                                         const std::vector<Bicomplex>& points,
                                         const TransformConvention& conv) {
    conv.validate();
    return transform_impl(F, points, conv.sign, conv.forward_prefactor);
}

std::vector<Bicomplex> inverse_fourier(const SampledProductFunction& G,
                                       const std::vector<Bicomplex>& points,
                                       const TransformConvention& conv) {
    conv.validate();
    return transform_impl(G, points, -conv.sign, conv.inverse_prefactor());
}

std::pair<Hyperbolic, Hyperbolic> plancherel_check(const SampledProductFunction& F,
                                                   const ProductGrid& frequency_grid,
                                                   const TransformConvention& conv) {
    conv.validate();
    const Hyperbolic lhs = l2k_norm_squared(F);

    SampledProductFunction hat;
    hat.grid = frequency_grid;
    hat.values1.reserve(frequency_grid.nodes1.size());
    for (double w : frequency_grid.nodes1) {
        hat.values1.push_back(component_transform(F.grid.nodes1, F.grid.weights1, F.values1,
                                                  Cplx(w, 0.0), conv.sign,
                                                  conv.forward_prefactor));
    }
    hat.values2.reserve(frequency_grid.nodes2.size());
    for (double w : frequency_grid.nodes2) {
        hat.values2.push_back(component_transform(F.grid.nodes2, F.grid.weights2, F.values2,
                                                  Cplx(w, 0.0), conv.sign,
                                                  conv.forward_prefactor));
    }

    const double scale =
        1.0 / (2.0 * std::numbers::pi * conv.forward_prefactor * conv.forward_prefactor);
    const Hyperbolic energy = l2k_norm_squared(hat);
    const Hyperbolic rhs = scale * energy;
    return {lhs, rhs};
}

}  // namespace bcpw
