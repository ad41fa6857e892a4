#pragma once

// Cross-verification of the closed-form images over a parameter grid.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "msm/grid.hpp"

namespace msm {

struct VerifyConfig {
    int quad_nodes = 200;
    std::uint64_t seed = 42;
    double series_tolerance = 1e-10;
    double quadrature_tolerance = 1e-6;
    int max_terms = kDefaultMaxTerms;
    int threads = 0; // 0: hardware concurrency
    bool timings = false;
};

struct VerifyOutcome {
    nlohmann::json report; // without the timestamp
    std::string csv;
    int cases = 0;
    int failures = 0;
};

VerifyOutcome run_verification(const GridSpec& grid, const VerifyConfig& cfg);

/// Relative error |a-b| / max(|a|, |b|), 0 when both vanish.
double relative_error(Complex a, Complex b);

/// Rounds to three significant digits.
double round3(double v);

/// Writes report with a leading "generated_at" member.
std::string render_report(const nlohmann::json& report, const std::string& timestamp);

} // namespace msm
