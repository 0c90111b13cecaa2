#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "bcpw/bicomplex.hpp"

using namespace bcpw;

namespace {

// Cartesian product formula written out from the unit table (i^2 = j^2 = -1,
// ij = ji = k, ik = ki = -j, jk = kj = -i, k^2 = +1), independent of the
// library's z-pair implementation.
Bicomplex mul_by_unit_table(const Bicomplex& u, const Bicomplex& v) {
    const double x0 = u.x0(), x1 = u.x1(), x2 = u.x2(), x3 = u.x3();
    const double y0 = v.x0(), y1 = v.x1(), y2 = v.x2(), y3 = v.x3();
    return Bicomplex(x0 * y0 - x1 * y1 - x2 * y2 + x3 * y3,
                     x0 * y1 + x1 * y0 - x2 * y3 - x3 * y2,
                     x0 * y2 + x2 * y0 - x1 * y3 - x3 * y1,
                     x0 * y3 + x3 * y0 + x1 * y2 + x2 * y1);
}

double max_abs(const Bicomplex& Z) {
    return std::max(std::max(std::abs(Z.x0()), std::abs(Z.x1())),
                    std::max(std::abs(Z.x2()), std::abs(Z.x3())));
}

Bicomplex random_bicomplex(std::mt19937_64& rng, double lo = -10.0, double hi = 10.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    return Bicomplex(u(rng), u(rng), u(rng), u(rng));
}

}  // namespace

TEST_CASE("idempotent decomposition of the units") {
    CHECK(unit_j().beta1() == Cplx(0.0, -1.0));
    CHECK(unit_j().beta2() == Cplx(0.0, 1.0));
    CHECK(unit_k().beta1() == Cplx(1.0, 0.0));
    CHECK(unit_k().beta2() == Cplx(-1.0, 0.0));
    CHECK(unit_i().beta1() == Cplx(0.0, 1.0));
    CHECK(unit_i().beta2() == Cplx(0.0, 1.0));

    const Bicomplex Z(1.0, 2.0, 3.0, 4.0);
    CHECK(Z.beta1() == Cplx(5.0, -1.0));
    CHECK(Z.beta2() == Cplx(-3.0, 5.0));
    const auto [b1, b2] = to_idempotent(Z);
    CHECK(b1 == Z.beta1());
    CHECK(b2 == Z.beta2());
    CHECK(Bicomplex::from_idempotent(b1, b2) == Z);
}

TEST_CASE("idempotent basis identities hold exactly") {
    const Bicomplex e = idempotent_e();
    const Bicomplex ed = idempotent_e_dagger();
    CHECK(e * e == e);
    CHECK(ed * ed == ed);
    CHECK(e * ed == Bicomplex());
    CHECK(e + ed == Bicomplex(1.0));
    CHECK(unit_i() * unit_j() == unit_k());
    CHECK(unit_k() * unit_k() == Bicomplex(1.0));
    CHECK(unit_i() * unit_i() == -Bicomplex(1.0));
    CHECK(unit_j() * unit_j() == -Bicomplex(1.0));
}

TEST_CASE("multiplication agrees with the unit-table formula") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex u = random_bicomplex(rng);
        const Bicomplex v = random_bicomplex(rng);
        const Bicomplex p = u * v;
        const Bicomplex q = mul_by_unit_table(u, v);
        const double scale = std::max(1.0, max_abs(q));
        CHECK(max_abs(p - q) <= 1e-13 * scale);
    }
}

TEST_CASE("multiplication is componentwise in idempotent coordinates") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex u = random_bicomplex(rng);
        const Bicomplex v = random_bicomplex(rng);
        const Bicomplex p = u * v;
        const Cplx q1 = u.beta1() * v.beta1();
        const Cplx q2 = u.beta2() * v.beta2();
        const double scale = std::max({std::abs(q1), std::abs(q2), 1.0});
        CHECK(std::abs(p.beta1() - q1) <= 1e-13 * scale);
        CHECK(std::abs(p.beta2() - q2) <= 1e-13 * scale);
    }
}

TEST_CASE("hyperbolic norm is multiplicative") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex u = random_bicomplex(rng);
        const Bicomplex v = random_bicomplex(rng);
        const Hyperbolic lhs = hyperbolic_norm(u * v);
        const Hyperbolic rhs = hyperbolic_norm(u) * hyperbolic_norm(v);
        const double scale = std::max({rhs.s1(), rhs.s2(), 1.0});
        CHECK(std::abs(lhs.s1() - rhs.s1()) <= 1e-12 * scale);
        CHECK(std::abs(lhs.s2() - rhs.s2()) <= 1e-12 * scale);
    }
}

TEST_CASE("conjugation is a multiplicative involution") {
    CHECK(conjugate_star(unit_i() + 2.0 * unit_j()) == -unit_i() - 2.0 * unit_j());
    std::mt19937_64 rng(17);
    for (int it = 0; it < 500; ++it) {
        const Bicomplex u = random_bicomplex(rng);
        const Bicomplex v = random_bicomplex(rng);
        CHECK(conjugate_star(conjugate_star(u)) == u);
        CHECK(conjugate_star(u).beta1() == std::conj(u.beta1()));
        CHECK(conjugate_star(u).beta2() == std::conj(u.beta2()));
        const Bicomplex lhs = conjugate_star(u * v);
        const Bicomplex rhs = conjugate_star(u) * conjugate_star(v);
        CHECK(max_abs(lhs - rhs) <= 1e-13 * std::max(1.0, max_abs(rhs)));
    }
}

TEST_CASE("zero divisors and inversion") {
    CHECK((Bicomplex(1.0) + unit_j()) * (Bicomplex(1.0) - unit_j()) == Bicomplex(2.0));
    CHECK(invert(unit_j()) == -unit_j());
    CHECK_THROWS_AS(invert(idempotent_e()), ZeroDivisorError);
    CHECK_THROWS_AS(invert(Bicomplex()), ZeroDivisorError);

    std::mt19937_64 rng(19);
    for (int it = 0; it < 500; ++it) {
        const Bicomplex u = random_bicomplex(rng);
        if (std::abs(u.beta1()) < 1e-6 || std::abs(u.beta2()) < 1e-6) continue;
        const Bicomplex p = u * invert(u);
        CHECK(max_abs(p - Bicomplex(1.0)) <= 1e-12);
    }
}

TEST_CASE("exponential matches the power series and splits componentwise") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 200; ++it) {
        const Bicomplex Z = random_bicomplex(rng, -1.0, 1.0);
        Bicomplex series(1.0);
        Bicomplex power(1.0);
        double factorial = 1.0;
        for (int n = 1; n < 25; ++n) {
            power = power * Z;
            factorial *= n;
            series = series + (1.0 / factorial) * power;
        }
        CHECK(max_abs(exp_bc(Z) - series) <= 1e-12);
    }

    const Bicomplex E = exp_bc(std::log(2.0) * unit_k());
    CHECK(std::abs(E.x0() - 1.25) <= 1e-15);
    CHECK(std::abs(E.x3() - 0.75) <= 1e-15);
    CHECK(E.x1() == 0.0);
    CHECK(E.x2() == 0.0);
}

TEST_CASE("hyperbolic arithmetic in idempotent components") {
    const Hyperbolic h = Hyperbolic::from_components(3.0, 4.0);
    CHECK(h.a() == 3.5);
    CHECK(h.b() == -0.5);
    CHECK(h.s1() == 3.0);
    CHECK(h.s2() == 4.0);

    const Hyperbolic p = Hyperbolic(1.0, 2.0) * Hyperbolic(3.0, 1.0);
    CHECK(p == Hyperbolic(5.0, 7.0));

    CHECK(exp_d(Hyperbolic(0.0, 0.0)) == Hyperbolic(1.0, 0.0));
    const Hyperbolic ek = exp_d(Hyperbolic(0.0, 1.0));
    CHECK(std::abs(ek.a() - std::cosh(1.0)) <= 1e-15);
    CHECK(std::abs(ek.b() - std::sinh(1.0)) <= 1e-15);

    CHECK(Hyperbolic(1.0, 0.5).nonneg());
    CHECK_FALSE(Hyperbolic(1.0, 2.0).nonneg());
}

TEST_CASE("partial order is three valued") {
    CHECK(leq(Hyperbolic(0.0, 0.0), Hyperbolic(1.0, 0.0)) == Tristate::yes);
    CHECK(leq(Hyperbolic(1.0, 0.0), Hyperbolic(1.0, 0.0)) == Tristate::yes);
    CHECK(leq(Hyperbolic(1.0, 0.0), Hyperbolic(0.0, 0.0)) == Tristate::no);
    CHECK(leq(Hyperbolic(0.0, 1.0), Hyperbolic(0.0, 0.0)) == Tristate::incomparable);
    CHECK(leq(Hyperbolic(0.0, -1.0), Hyperbolic(0.0, 0.0)) == Tristate::incomparable);
}

TEST_CASE("upper half plane matches positive imaginary idempotent parts") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int it = 0; it < 2000; ++it) {
        const Bicomplex Z(u(rng), u(rng), u(rng), u(rng));
        const bool by_parts = Z.beta1().imag() > 0.0 && Z.beta2().imag() > 0.0;
        CHECK(in_upper_half_plane(Z) == by_parts);
    }
    CHECK(in_upper_half_plane(unit_i()));
    CHECK_FALSE(in_upper_half_plane(-unit_i()));
    CHECK_FALSE(in_upper_half_plane(unit_i() + 2.0 * unit_j()));
}
