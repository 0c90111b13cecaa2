#include <doctest.h>

#include <cmath>
#include <complex>

#include "bcpw/cauchy.hpp"
#include "bcpw/densities.hpp"
#include "bcpw/quadrature.hpp"

using namespace bcpw;

namespace {

// Boundary samples of 1/(w + i)^2 on a wide real-line grid. The closure decays
// like 1/w^2, so truncation at 2000 leaves errors well below the tolerances.
SampledProductFunction hardy_samples() {
    const ProductGrid g = make_grid(DInterval::both(-2000.0, 2000.0), 131072);
    return sample_density("rational_hardy", g);
}

Cplx closure(Cplx beta) { return 1.0 / ((beta + Cplx(0.0, 1.0)) * (beta + Cplx(0.0, 1.0))); }

}  // namespace

TEST_CASE("cauchy integral reproduces a hardy function in the upper half plane") {
    const SampledProductFunction H = hardy_samples();

    const Bicomplex at_i = cauchy_integral(H, unit_i());
    CHECK(std::abs(at_i.beta1() - Cplx(-0.25, 0.0)) <= 1e-8);
    CHECK(std::abs(at_i.beta2() - Cplx(-0.25, 0.0)) <= 1e-8);

    const Bicomplex at_2i = cauchy_integral(H, 2.0 * unit_i());
    CHECK(std::abs(at_2i.beta1() - Cplx(-1.0 / 9.0, 0.0)) <= 1e-8);

    // Independent idempotent components: beta1 at i, beta2 at 2i.
    const Bicomplex mixed =
        cauchy_integral(H, Bicomplex::from_idempotent(Cplx(0.0, 1.0), Cplx(0.0, 2.0)));
    CHECK(std::abs(mixed.beta1() - Cplx(-0.25, 0.0)) <= 1e-8);
    CHECK(std::abs(mixed.beta2() - Cplx(-1.0 / 9.0, 0.0)) <= 1e-8);

    // Off-axis point.
    const Bicomplex off = cauchy_integral(H, Bicomplex(1.0, 1.5, 0.0, 0.0));
    CHECK(std::abs(off.beta1() - closure(Cplx(1.0, 1.5))) <= 1e-8);
}

TEST_CASE("cauchy integral vanishes in the lower half plane") {
    const SampledProductFunction H = hardy_samples();
    CHECK(std::abs(cauchy_integral(H, -unit_i()).beta1()) <= 1e-8);
    CHECK(std::abs(cauchy_integral(H, Bicomplex(0.5, -2.0, 0.0, 0.0)).beta2()) <= 1e-8);
}

TEST_CASE("boundary points are rejected") {
    const SampledProductFunction H = hardy_samples();
    CHECK_THROWS_AS(cauchy_integral(H, Bicomplex(1.0)), OnBoundaryError);
    // One idempotent component real is already out of domain.
    CHECK_THROWS_AS(cauchy_integral(H, Bicomplex::from_idempotent(Cplx(0.0, 1.0), Cplx(2.0, 0.0))),
                    OnBoundaryError);
}

TEST_CASE("jump identity across the boundary") {
    const SampledProductFunction H = hardy_samples();
    const ProductFunction ref{closure, closure};
    const auto [lhs, rhs] = jump_identity(H, unit_i(), ref);
    CHECK(std::abs(lhs.beta1() - rhs.beta1()) <= 1e-8);
    CHECK(std::abs(lhs.beta2() - rhs.beta2()) <= 1e-8);
    CHECK(std::abs(rhs.beta1() - Cplx(-0.25, 0.0)) <= 1e-12);
}
