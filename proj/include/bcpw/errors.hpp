#pragma once

#include <stdexcept>
#include <string>

namespace bcpw {

/// Inverting a bicomplex zero divisor (a vanishing idempotent component).
struct ZeroDivisorError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Grid over an infinite interval requested without a positive truncation bound.
struct BadTruncationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Sampled data contains NaN or infinity.
struct NonFiniteError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Evaluation point lies outside the operation's domain of validity.
struct OutOfDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Cauchy evaluation point has an idempotent component on the boundary line.
struct OnBoundaryError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Quadrature partial sums exceeded the growth guard (integrand diverges).
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed CLI flag, config file, or input file.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace bcpw
