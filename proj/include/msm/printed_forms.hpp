#pragma once

// Literal transcriptions of the published image formulas, kept only so the
// audit can compare them against the derived implementations. Nothing else
// in the library calls these.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "msm/images.hpp"

namespace msm {

struct ParameterPoint {
    MsmParams params;
    Complex rho = 1.0;
    Complex p = 0.0;
    Complex b = 1.0;
    Complex c = 1.0;
    double x = 1.0;
};

struct PrintedForm {
    std::string name;
    std::string statement; // human-readable summary of the printed formula
    std::function<Complex(const ParameterPoint&)> printed;
    // Derived value, or nullopt when the point is outside the formula's domain.
    std::function<std::optional<Complex>(const ParameterPoint&)> derived;
};

/// All transcribed forms: Lemma 2, Theorems 2-4, and the sixteen trig images.
const std::vector<PrintedForm>& printed_forms();

struct AuditEntry {
    std::string form;
    std::string statement;
    Complex printed;
    Complex derived;
    double rel_error = 0.0;
    std::string error; // non-empty when the printed form could not be evaluated
    bool mismatch = false;
};

struct AuditResult {
    int checked = 0;
    int skipped = 0;
    std::vector<AuditEntry> entries; // mismatches only
};

/// Evaluates every printed form at pt; entries whose relative error exceeds
/// tol (or that fail to evaluate) are reported.
AuditResult audit_printed_forms(const ParameterPoint& pt, double tol = 1e-8);

} // namespace msm
