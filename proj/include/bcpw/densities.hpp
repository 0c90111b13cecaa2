#pragma once

#include <functional>
#include <string>

#include "bcpw/quadrature.hpp"

namespace bcpw {

/// Named scalar profiles shared by the test suites and the CLI:
///   exp_decay       exp(-|t|)
///   gaussian        exp(-t^2 / 2)
///   indicator       1 on (-A, A), 0 outside; "indicator" uses A = 1, "indicator(2.5)"
///                   sets A explicitly
///   rational_hardy  1 / (w + i)^2, a Hardy-class boundary function
/// Throws ConfigError for unknown names or a malformed indicator argument.
std::function<Cplx(double)> density_profile(const std::string& name);

/// Band limit A encoded in an indicator name ("indicator" -> 1, "indicator(A)" -> A).
/// Returns 0 for non-indicator names.
double indicator_band_limit(const std::string& name);

/// Second Hardy-class boundary function used by the verification suites:
/// 1 / ((w + i)(w + 2i)).
std::function<Cplx(double)> rational_hardy_pair();

/// Sample a named profile on a grid, same profile in both components.
SampledProductFunction sample_density(const std::string& name, const ProductGrid& grid);

}  // namespace bcpw
