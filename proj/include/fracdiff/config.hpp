#pragma once

#include "fracdiff/expression.hpp"
#include "fracdiff/problem.hpp"
#include "fracdiff/verification.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace fracdiff {

/// A JSON run description. Top-level keys, all others rejected:
///
///     dimension     1 | 2
///     domain        {"x": [xl, xr]} plus "y" in 2D
///     T             final time
///     orders        {"gamma", "alpha"} plus "beta" in 2D
///     grid          {"nx", "nt"} plus "ny" in 2D (cell and step counts)
///     scheme        "implicit" | "explicit"
///     coefficients  {"c"} plus "d" in 2D
///     source, initial, boundary   expressions in x, y, t
///     exact         optional expression
///     output        optional CSV path
///
/// Expressions in 1D see y = 0. `initial` ignores t; `boundary` is evaluated
/// on the boundary nodes.
struct RunConfig {
    int dimension = 1;
    Grid1D x;
    std::optional<Grid1D> y;
    double final_time = 1.0;
    std::size_t steps = 1;
    double gamma = 1.0;
    double alpha = 2.0;
    std::optional<double> beta;
    Scheme scheme = Scheme::Implicit;
    Expr c = make_expr(ast::Number{0.0});
    std::optional<Expr> d;
    Expr source = make_expr(ast::Number{0.0});
    Expr initial = make_expr(ast::Number{0.0});
    Expr boundary = make_expr(ast::Number{0.0});
    std::optional<Expr> exact;
    std::optional<std::string> output;

    ProblemSpec1D spec_1d() const;
    ProblemSpec2D spec_2d() const;
};

/// Throws Error(Schema) naming the offending key, SyntaxError for bad
/// expressions (message prefixed with the key) and Error(Io) for unreadable files.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::string& path);

}  // namespace fracdiff
