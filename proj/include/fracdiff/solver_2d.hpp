#pragma once

#include "fracdiff/problem.hpp"
#include "fracdiff/solve_options.hpp"

#include <optional>
#include <vector>

namespace fracdiff {

struct SolveResult2D {
    Field final;
    std::optional<std::vector<Field>> history;
    std::vector<double> max_abs;
    /// Implicit only: ||A u - b||_inf of each linear solve.
    std::vector<double> residuals;
};

/// Interior unknowns are ordered lexicographically with the y index fastest.
SolveResult2D solve_implicit_2d(const ProblemSpec2D& spec, const SolveOptions& options = {});

/// Requires alpha, beta in (1, 2].
SolveResult2D solve_explicit_2d(const ProblemSpec2D& spec, const SolveOptions& options = {});

}  // namespace fracdiff
