#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bcpw/densities.hpp"
#include "bcpw/quadrature.hpp"
#include "bcpw/transform.hpp"

using namespace bcpw;

namespace {

const TransformConvention kUnitPrefactor{1.0, -1};

Cplx value_at_real(const SampledProductFunction& F, double z,
                   const TransformConvention& conv = {}) {
    return bicomplex_fourier(F, {Bicomplex(z)}, conv)[0].beta1();
}

}  // namespace

TEST_CASE("convention prefactors multiply to 1/(2 pi)") {
    const TransformConvention def{};
    CHECK(std::abs(def.forward_prefactor - 1.0 / (2.0 * std::numbers::pi)) <= 1e-18);
    CHECK(std::abs(def.inverse_prefactor() - 1.0) <= 1e-15);
    CHECK(std::abs(kUnitPrefactor.inverse_prefactor() - 1.0 / (2.0 * std::numbers::pi)) <= 1e-18);

    CHECK_THROWS_AS(bicomplex_fourier({}, {}, TransformConvention{0.0, -1}), ConfigError);
    CHECK_THROWS_AS(bicomplex_fourier({}, {}, TransformConvention{-1.0, -1}), ConfigError);
    CHECK_THROWS_AS(bicomplex_fourier({}, {}, TransformConvention{1.0, 0}), ConfigError);
    CHECK_THROWS_AS(bicomplex_fourier({}, {}, TransformConvention{1.0, 2}), ConfigError);
}

TEST_CASE("two-sided exponential transforms to a lorentzian") {
    const ProductGrid tg = make_grid(DInterval::both(-40.0, 40.0), 16384);
    const SampledProductFunction F = sample_density("exp_decay", tg);

    CHECK(std::abs(value_at_real(F, 0.0, kUnitPrefactor) - Cplx(2.0, 0.0)) <= 1e-9);
    CHECK(std::abs(value_at_real(F, 2.0, kUnitPrefactor) - Cplx(0.4, 0.0)) <= 1e-9);
    CHECK(std::abs(value_at_real(F, -2.0, kUnitPrefactor) - Cplx(0.4, 0.0)) <= 1e-9);

    for (double z : {0.5, 1.0, 3.0}) {
        const Cplx got = value_at_real(F, z, kUnitPrefactor);
        CHECK(std::abs(got - Cplx(2.0 / (1.0 + z * z), 0.0)) <= 1e-9);
    }
}

TEST_CASE("gaussian transforms to a gaussian, also at bicomplex points") {
    const ProductGrid tg = make_grid(DInterval::both(-10.0, 10.0), 2048);
    const SampledProductFunction F = sample_density("gaussian", tg);
    const double root = std::sqrt(2.0 * std::numbers::pi);

    CHECK(std::abs(value_at_real(F, 1.0, kUnitPrefactor) - Cplx(root * std::exp(-0.5), 0.0)) <=
          1e-10);

    // At Z = i both idempotent components are i and the kernel becomes exp(t).
    const Bicomplex at_i = bicomplex_fourier(F, {unit_i()}, kUnitPrefactor)[0];
    CHECK(std::abs(at_i.beta1() - Cplx(root * std::exp(0.5), 0.0)) <= 1e-10);
    CHECK(std::abs(at_i.beta2() - Cplx(root * std::exp(0.5), 0.0)) <= 1e-10);
}

TEST_CASE("inverse transform undoes the forward transform") {
    const ProductGrid tg = make_grid(DInterval::both(-10.0, 10.0), 2048);
    const SampledProductFunction F = sample_density("gaussian", tg);

    const ProductGrid wg = make_grid(DInterval::both(-20.0, 20.0), 2048);
    std::vector<Bicomplex> wpts;
    wpts.reserve(wg.nodes1.size());
    for (double w : wg.nodes1) wpts.emplace_back(w);
    const std::vector<Bicomplex> hat = bicomplex_fourier(F, wpts);

    SampledProductFunction G;
    G.grid = wg;
    G.values1.reserve(hat.size());
    G.values2.reserve(hat.size());
    for (const Bicomplex& H : hat) {
        G.values1.push_back(H.beta1());
        G.values2.push_back(H.beta2());
    }

    for (double t : {-1.0, 0.0, 0.7}) {
        const Bicomplex back = inverse_fourier(G, {Bicomplex(t)})[0];
        CHECK(std::abs(back.beta1() - Cplx(std::exp(-0.5 * t * t), 0.0)) <= 1e-8);
        CHECK(std::abs(back.beta2() - Cplx(std::exp(-0.5 * t * t), 0.0)) <= 1e-8);
    }
}

TEST_CASE("truncated inverse of the lorentzian matches its tail integral") {
    const ProductGrid tg = make_grid(DInterval::both(-40.0, 40.0), 8192);
    const SampledProductFunction F = sample_density("exp_decay", tg);

    const ProductGrid wg = make_grid(DInterval::both(-60.0, 60.0), 4096);
    std::vector<Bicomplex> wpts;
    for (double w : wg.nodes1) wpts.emplace_back(w);
    const std::vector<Bicomplex> hat = bicomplex_fourier(F, wpts);

    SampledProductFunction G;
    G.grid = wg;
    for (const Bicomplex& H : hat) {
        G.values1.push_back(H.beta1());
        G.values2.push_back(H.beta2());
    }

    // At t = 0 the inverse reduces to the integral of 1/(pi (1 + w^2)) over (-60, 60).
    const Bicomplex back = inverse_fourier(G, {Bicomplex(0.0)})[0];
    const double expected = 2.0 / std::numbers::pi * std::atan(60.0);
    CHECK(std::abs(back.beta1() - Cplx(expected, 0.0)) <= 1e-9);
}

TEST_CASE("plancherel identity for the two-sided exponential") {
    const ProductGrid tg = make_grid(DInterval::both(-20.0, 20.0), 2048);
    const SampledProductFunction F = sample_density("exp_decay", tg);
    const ProductGrid wg = make_grid(DInterval::both(-150.0, 150.0), 2048);

    const auto [lhs, rhs] = plancherel_check(F, wg);
    CHECK(std::abs(lhs.s1() - 1.0) <= 1e-12);
    CHECK(std::abs(lhs.s2() - 1.0) <= 1e-12);
    CHECK(std::abs(rhs.s1() - lhs.s1()) <= 1e-6);
    CHECK(std::abs(rhs.s2() - lhs.s2()) <= 1e-6);

    // The identity is convention independent.
    const auto [lhs_u, rhs_u] = plancherel_check(F, wg, kUnitPrefactor);
    CHECK(lhs_u.s1() == lhs.s1());
    CHECK(std::abs(rhs_u.s1() - rhs.s1()) <= 1e-9);

    // Doubling the samples scales both sides by exactly 4.
    SampledProductFunction F2 = F;
    for (Cplx& v : F2.values1) v *= 2.0;
    for (Cplx& v : F2.values2) v *= 2.0;
    const auto [lhs2, rhs2] = plancherel_check(F2, wg);
    CHECK(std::abs(lhs2.s1() - 4.0 * lhs.s1()) <= 1e-14);
    CHECK(std::abs(rhs2.s1() - 4.0 * rhs.s1()) <= 1e-9 * rhs.s1());
}

TEST_CASE("growth guard and sample validation") {
    const ProductGrid g = make_grid(DInterval::both(0.0, 1.0), 16);
    const SampledProductFunction huge = sample(g, [](double) { return Cplx(1e15, 0.0); });
    CHECK_THROWS_AS(bicomplex_fourier(huge, {Bicomplex(0.0)}), DivergenceError);

    SampledProductFunction bad = sample(g, [](double) { return Cplx(1.0, 0.0); });
    bad.values2[0] = Cplx(0.0, std::numeric_limits<double>::quiet_NaN());
    CHECK_THROWS_AS(bicomplex_fourier(bad, {Bicomplex(0.0)}), NonFiniteError);
}
