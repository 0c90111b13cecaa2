#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "bcpw/errors.hpp"

namespace bcpw {

using Cplx = std::complex<double>;

/// Three-valued result of the hyperbolic partial-order comparison.
enum class Tristate { yes, no, incomparable };

/// Hyperbolic number a + k b with k^2 = +1.
/// Idempotent components s1 = a + b and s2 = a - b; arithmetic is componentwise in (s1, s2).
class Hyperbolic {
  public:
    constexpr Hyperbolic() : a_(0.0), b_(0.0) {}
    constexpr Hyperbolic(double a, double b) : a_(a), b_(b) {}
    explicit constexpr Hyperbolic(double real) : a_(real), b_(0.0) {}

    static constexpr Hyperbolic from_components(double s1, double s2) {
        return Hyperbolic(0.5 * (s1 + s2), 0.5 * (s1 - s2));
    }

    constexpr double a() const { return a_; }
    constexpr double b() const { return b_; }
    constexpr double s1() const { return a_ + b_; }
    constexpr double s2() const { return a_ - b_; }

    constexpr bool nonneg() const { return s1() >= 0.0 && s2() >= 0.0; }

    friend constexpr Hyperbolic operator+(Hyperbolic u, Hyperbolic v) {
        return Hyperbolic(u.a_ + v.a_, u.b_ + v.b_);
    }
    friend constexpr Hyperbolic operator-(Hyperbolic u, Hyperbolic v) {
        return Hyperbolic(u.a_ - v.a_, u.b_ - v.b_);
    }
    friend constexpr Hyperbolic operator-(Hyperbolic u) { return Hyperbolic(-u.a_, -u.b_); }
    friend constexpr Hyperbolic operator*(Hyperbolic u, Hyperbolic v) {
        return from_components(u.s1() * v.s1(), u.s2() * v.s2());
    }
    friend constexpr Hyperbolic operator*(double c, Hyperbolic u) {
        return Hyperbolic(c * u.a_, c * u.b_);
    }
    friend constexpr Hyperbolic operator*(Hyperbolic u, double c) { return c * u; }
    friend constexpr bool operator==(Hyperbolic u, Hyperbolic v) {
        return u.a_ == v.a_ && u.b_ == v.b_;
    }

  private:
    double a_, b_;
};

/// Componentwise exponential in idempotent coordinates.
inline Hyperbolic exp_d(Hyperbolic h) {
    return Hyperbolic::from_components(std::exp(h.s1()), std::exp(h.s2()));
}

/// Partial order on the hyperbolic plane: u <= v iff both idempotent components compare <=.
/// Returns incomparable when the two component comparisons disagree.
inline Tristate leq(Hyperbolic u, Hyperbolic v) {
    const bool c1 = u.s1() <= v.s1();
    const bool c2 = u.s2() <= v.s2();
    if (c1 && c2) return Tristate::yes;
    if (!c1 && !c2) return Tristate::no;
    return Tristate::incomparable;
}

/// Bicomplex number x0 + x1 i + x2 j + x3 k with commuting units i, j (i^2 = j^2 = -1, k = ij).
/// The four cartesian coefficients are the stored representation; the complex pair
/// (z1, z2) with Z = z1 + j z2 and the idempotent pair (beta1, beta2) with
/// Z = e beta1 + e~ beta2, e = (1 + k)/2, e~ = (1 - k)/2, are derived views.
class Bicomplex {
  public:
    constexpr Bicomplex() : x_{0.0, 0.0, 0.0, 0.0} {}
    constexpr Bicomplex(double x0, double x1, double x2, double x3) : x_{x0, x1, x2, x3} {}
    explicit constexpr Bicomplex(double real) : x_{real, 0.0, 0.0, 0.0} {}

    /// Z = z1 + j z2.
    static Bicomplex from_z(Cplx z1, Cplx z2) {
        return Bicomplex(z1.real(), z1.imag(), z2.real(), z2.imag());
    }

    /// Z = e beta1 + e~ beta2.
    static Bicomplex from_idempotent(Cplx beta1, Cplx beta2) {
        return Bicomplex(0.5 * (beta1.real() + beta2.real()),
                         0.5 * (beta1.imag() + beta2.imag()),
                         0.5 * (beta2.imag() - beta1.imag()),
                         0.5 * (beta1.real() - beta2.real()));
    }

    constexpr double x0() const { return x_[0]; }
    constexpr double x1() const { return x_[1]; }
    constexpr double x2() const { return x_[2]; }
    constexpr double x3() const { return x_[3]; }

    Cplx z1() const { return {x_[0], x_[1]}; }
    Cplx z2() const { return {x_[2], x_[3]}; }
    Cplx beta1() const { return {x_[0] + x_[3], x_[1] - x_[2]}; }
    Cplx beta2() const { return {x_[0] - x_[3], x_[1] + x_[2]}; }

    friend constexpr Bicomplex operator+(const Bicomplex& u, const Bicomplex& v) {
        return Bicomplex(u.x_[0] + v.x_[0], u.x_[1] + v.x_[1], u.x_[2] + v.x_[2],
                         u.x_[3] + v.x_[3]);
    }
    friend constexpr Bicomplex operator-(const Bicomplex& u, const Bicomplex& v) {
        return Bicomplex(u.x_[0] - v.x_[0], u.x_[1] - v.x_[1], u.x_[2] - v.x_[2],
                         u.x_[3] - v.x_[3]);
    }
    friend constexpr Bicomplex operator-(const Bicomplex& u) {
        return Bicomplex(-u.x_[0], -u.x_[1], -u.x_[2], -u.x_[3]);
    }
    friend Bicomplex operator*(const Bicomplex& u, const Bicomplex& v) {
        const Cplx r1 = u.z1() * v.z1() - u.z2() * v.z2();
        const Cplx r2 = u.z1() * v.z2() + u.z2() * v.z1();
        return from_z(r1, r2);
    }
    friend constexpr Bicomplex operator*(double c, const Bicomplex& u) {
        return Bicomplex(c * u.x_[0], c * u.x_[1], c * u.x_[2], c * u.x_[3]);
    }
    friend constexpr Bicomplex operator*(const Bicomplex& u, double c) { return c * u; }
    friend constexpr bool operator==(const Bicomplex& u, const Bicomplex& v) {
        return u.x_[0] == v.x_[0] && u.x_[1] == v.x_[1] && u.x_[2] == v.x_[2] &&
               u.x_[3] == v.x_[3];
    }

  private:
    double x_[4];
};

/// Idempotent basis elements e = (1 + k)/2 and e~ = (1 - k)/2.
inline constexpr Bicomplex idempotent_e() { return Bicomplex(0.5, 0.0, 0.0, 0.5); }
inline constexpr Bicomplex idempotent_e_dagger() { return Bicomplex(0.5, 0.0, 0.0, -0.5); }

/// Units as bicomplex values.
inline constexpr Bicomplex unit_i() { return Bicomplex(0.0, 1.0, 0.0, 0.0); }
inline constexpr Bicomplex unit_j() { return Bicomplex(0.0, 0.0, 1.0, 0.0); }
inline constexpr Bicomplex unit_k() { return Bicomplex(0.0, 0.0, 0.0, 1.0); }

/// Idempotent decomposition (beta1, beta2) of Z.
inline std::pair<Cplx, Cplx> to_idempotent(const Bicomplex& Z) {
    return {Z.beta1(), Z.beta2()};
}

/// Multiplicative inverse. Throws ZeroDivisorError when either idempotent component is 0.
inline Bicomplex invert(const Bicomplex& Z) {
    const Cplx b1 = Z.beta1();
    const Cplx b2 = Z.beta2();
    if (b1 == Cplx(0.0, 0.0) || b2 == Cplx(0.0, 0.0)) {
        throw ZeroDivisorError("invert: idempotent component is zero");
    }
    return Bicomplex::from_idempotent(1.0 / b1, 1.0 / b2);
}

/// Conjugation acting as complex conjugation on each idempotent component:
/// x0 + x1 i + x2 j + x3 k -> x0 - x1 i - x2 j + x3 k.
inline Bicomplex conjugate_star(const Bicomplex& Z) {
    return Bicomplex(Z.x0(), -Z.x1(), -Z.x2(), Z.x3());
}

/// Exponential, computed componentwise in idempotent coordinates.
inline Bicomplex exp_bc(const Bicomplex& Z) {
    return Bicomplex::from_idempotent(std::exp(Z.beta1()), std::exp(Z.beta2()));
}

/// Hyperbolic-valued norm: s-components (|beta1|, |beta2|). Multiplicative and nonnegative.
inline Hyperbolic hyperbolic_norm(const Bicomplex& Z) {
    return Hyperbolic::from_components(std::abs(Z.beta1()), std::abs(Z.beta2()));
}

/// Upper half plane x1 > |x2|, equivalently Im beta1 > 0 and Im beta2 > 0.
inline bool in_upper_half_plane(const Bicomplex& Z) {
    return Z.x1() > std::abs(Z.x2());
}

}  // namespace bcpw
