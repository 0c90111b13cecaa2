#include "bcpw/cauchy.hpp"

#include <cmath>
#include <numbers>

namespace bcpw {

namespace {

void check_finite(const std::vector<Cplx>& values, const char* where) {
    for (const Cplx& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NonFiniteError(std::string(where) + ": sample is not finite");
        }
    }
}

Cplx component_cauchy(const std::vector<double>& nodes, const std::vector<double>& weights,
                      const std::vector<Cplx>& values, Cplx beta) {
    const Cplx sum = pairwise_sum<Cplx>(0, values.size(), [&](std::size_t m) {
        return weights[m] * values[m] / (nodes[m] - beta);
    });
    return sum / (2.0 * std::numbers::pi * Cplx(0.0, 1.0));
}

}  // namespace

Bicomplex cauchy_integral(const SampledProductFunction& H, const Bicomplex& Z) {
    const Cplx b1 = Z.beta1();
    const Cplx b2 = Z.beta2();
    if (b1.imag() == 0.0 || b2.imag() == 0.0) {
        throw OnBoundaryError("cauchy_integral: idempotent component on the boundary line");
    }
    check_finite(H.values1, "cauchy_integral");
    check_finite(H.values2, "cauchy_integral");
    return Bicomplex::from_idempotent(
        component_cauchy(H.grid.nodes1, H.grid.weights1, H.values1, b1),
        component_cauchy(H.grid.nodes2, H.grid.weights2, H.values2, b2));
}

std::pair<Bicomplex, Bicomplex> jump_identity(const SampledProductFunction& H, const Bicomplex& Z,
                                              const ProductFunction& F_ref) {
    const Bicomplex lhs = cauchy_integral(H, Z) - cauchy_integral(H, conjugate_star(Z));
    return {lhs, F_ref(Z)};
}

}  // namespace bcpw
