#pragma once

#include "fracdiff/problem.hpp"
#include "fracdiff/solve_options.hpp"

#include <optional>
#include <vector>

namespace fracdiff {

struct SolveResult1D {
    Field final;
    std::optional<std::vector<Field>> history;  // levels 0..steps when requested
    std::vector<double> max_abs;                // max |u^k| for k = 0..steps
};

/// Implicit scheme: one dense LU solve per step. Unconditionally stable.
/// Throws StepError(NonFinite) with the offending step index.
SolveResult1D solve_implicit_1d(const ProblemSpec1D& spec, const SolveOptions& options = {});

/// Explicit scheme. Runs regardless of the stability bound; warns through
/// options.warn when the bound is violated. Requires alpha in (1, 2].
SolveResult1D solve_explicit_1d(const ProblemSpec1D& spec, const SolveOptions& options = {});

}  // namespace fracdiff
