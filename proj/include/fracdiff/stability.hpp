#pragma once

#include "fracdiff/problem.hpp"

#include <iosfwd>
#include <string>

namespace fracdiff {

/// Sufficient stability condition of an explicit scheme, evaluated for one spec.
///
/// 1D: tau^gamma / dx^alpha <= -Gamma(4-alpha)(1-2^-gamma) / (4 kappa_alpha C Gamma(2-gamma)(1-2^(1-alpha)))
///     with C the largest c over all grid and time nodes.
/// 2D: tau^gamma/dx^alpha + tau^gamma/dy^beta <= (1-2^-gamma) / (Gamma(2-gamma) C)
///     with C = max over nodes of -kappa_alpha(4-2^(3-alpha)) c / Gamma(4-alpha)
///     and -kappa_beta(4-2^(3-beta)) d / Gamma(4-beta).
/// A vanishing C means no spatial coupling; the bound is then +inf.
struct StabilityReport {
    std::string scheme;  // "explicit-1D" | "explicit-2D"
    double bound = 0.0;
    double actual = 0.0;
    bool satisfied = false;
    double c_max = 0.0;
    double d_max = 0.0;        // 2D only
    double bracket_max = 0.0;  // 2D only: the maximized bracket C above

    bool unconditional() const noexcept;
};

/// Requires alpha in [1 + 1e-6, 2]; throws ErrorKind::OrderRange otherwise.
StabilityReport explicit_bound_1d(const ProblemSpec1D& spec);

/// Requires alpha, beta in [1 + 1e-6, 2].
StabilityReport explicit_bound_2d(const ProblemSpec2D& spec);

/// Multi-line human-readable block.
void write_report(std::ostream& out, const StabilityReport& report);

/// `scheme,bound,actual,satisfied,c_max,d_max,bracket_max` header and row.
void write_report_csv(std::ostream& out, const StabilityReport& report, bool header = true);

}  // namespace fracdiff
