#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcpw/io.hpp"

namespace bcpw {

struct VerifyOptions {
    std::uint64_t seed = 20260817;
    /// Overrides the suite's headline tolerance when > 0.
    double tol = 0.0;
    /// Named density profile; empty selects the suite's pinned default.
    std::string density;
    /// Sample CSV path; mutually exclusive with density. A supplied density (named
    /// non-default or CSV) switches density-consuming suites to their identity rows:
    /// checks that hold for every density (linearity, two-sided matches, domination,
    /// contour vanishing, growth bounds). Closed-form oracle rows only run against the
    /// densities they are statements about.
    std::string density_csv;
    /// Grid-size override (> 0), suite default otherwise.
    int n = 0;
    /// Truncation / band-limit override (> 0), suite default otherwise.
    double T = 0.0;
};

struct SuiteResult {
    std::string suite;
    std::vector<ReportRow> rows;
    double seconds = 0.0;

    bool passed() const;
};

/// Names of the verification suites, in acceptance-criterion order.
const std::vector<std::string>& suite_names();

/// Run one suite by name. Throws ConfigError for unknown names.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace bcpw
