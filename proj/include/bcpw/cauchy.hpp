#pragma once

#include <utility>

#include "bcpw/bicomplex.hpp"
#include "bcpw/paley_wiener.hpp"
#include "bcpw/quadrature.hpp"

namespace bcpw {

/// Cauchy integral of boundary samples H over the real line, componentwise:
/// component i is (1 / 2 pi i) int H_i(w) / (w - beta_i) dw.
/// Reproduces Hardy-class H at upper-half-plane points and vanishes at lower ones.
/// Throws OnBoundaryError when either Im beta_i(Z) is 0, NonFiniteError on bad samples.
Bicomplex cauchy_integral(const SampledProductFunction& H, const Bicomplex& Z);

/// Jump identity pair at an upper-half-plane point:
/// lhs = C(Z) - C(conjugate_star(Z)), rhs = F_ref(Z).
/// The two agree whenever reproduction and vanishing both hold.
std::pair<Bicomplex, Bicomplex> jump_identity(const SampledProductFunction& H,
                                              const Bicomplex& Z,
                                              const ProductFunction& F_ref);

}  // namespace bcpw
