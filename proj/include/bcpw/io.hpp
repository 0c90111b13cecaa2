#pragma once

#include <string>
#include <vector>

#include "bcpw/bicomplex.hpp"
#include "bcpw/quadrature.hpp"

namespace bcpw {

/// Text form "x0 + x1 i + x2 j + x3 k" with shortest round-trip double formatting.
std::string to_text(const Bicomplex& Z);

/// Parse either the 4-tuple form "x0,x1,x2,x3" or the text form
/// "x0 + x1 i + x2 j + x3 k" (unit terms may be omitted or reordered).
/// Throws ConfigError on malformed input.
Bicomplex parse_bicomplex(const std::string& text);

/// Compact complex formatting "re + im i" used in CLI output.
std::string format_complex(Cplx value);

/// CSV with header t1,f1_re,f1_im,t2,f2_re,f2_im, one row per node index.
/// The format carries nodes and values only; reading rebuilds quadrature weights as
/// non-uniform trapezoid weights on the supplied nodes.
void write_samples_csv(const SampledProductFunction& F, const std::string& path);
SampledProductFunction read_samples_csv(const std::string& path);

/// Grid configuration as JSON with keys interval, n, scheme, truncation.
/// interval is [lo1, hi1, lo2, hi2]; infinite bounds are the strings "inf" / "-inf".
std::string grid_config_to_json(const DInterval& interval, int n, Scheme scheme,
                                double truncation);
struct GridConfig {
    DInterval interval;
    int n;
    Scheme scheme;
    double truncation;
};
GridConfig grid_config_from_json(const std::string& json_text);

/// One verification-report record.
struct ReportRow {
    std::string test;
    std::string parameter;
    double component1 = 0.0;
    double component2 = 0.0;
    double bound = 0.0;
    bool pass = false;
};

/// CSV with header test,parameter,component1_value,component2_value,bound,pass.
void write_report_csv(const std::vector<ReportRow>& rows, const std::string& path);

/// Evaluation points with transform-style values as CSV:
/// x0,x1,x2,x3,re_beta1,im_beta1,re_beta2,im_beta2 (point coordinates, then the
/// idempotent components of the value at that point).
void write_values_csv(const std::vector<Bicomplex>& points,
                      const std::vector<Bicomplex>& values, const std::string& path);

}  // namespace bcpw
