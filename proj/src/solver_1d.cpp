#include "fracdiff/solver_1d.hpp"

#include "fracdiff/coefficients.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/linalg.hpp"
#include "fracdiff/stability.hpp"
#include "time_levels.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace fracdiff {

namespace {

struct Setup {
    std::size_t n;
    double mu;     // Gamma(2-gamma) tau^gamma
    double scale;  // multiplies c_i to give the coupling coefficient of g
    std::shared_ptr<const DenseMatrix> g;
};

Setup prepare(const ProblemSpec1D& spec)
{
    spec.validate();
    const std::size_t n = spec.grid.cells;
    const double tg = std::pow(spec.time.tau(), spec.gamma);
    const double mu = gamma_fn(2.0 - spec.gamma) * tg;
    const double scale = -mu * kappa(spec.alpha) / (gamma_fn(4.0 - spec.alpha) * std::pow(spec.grid.dx(), spec.alpha));
    return {n, mu, scale, riesz_weight_table(spec.alpha, n)};
}

std::vector<double> initial_level(const ProblemSpec1D& spec)
{
    const std::size_t n = spec.grid.cells;
    std::vector<double> u(n + 1);
    u[0] = spec.boundary_left(0.0);
    u[n] = spec.boundary_right(0.0);
    for (std::size_t i = 1; i < n; ++i) u[i] = spec.u0(spec.grid.node(i));
    return u;
}

SolveResult1D finish(const ProblemSpec1D& spec, detail::TimeLevels&& levels, const SolveOptions& options)
{
    SolveResult1D result;
    result.max_abs = levels.max_abs_trace();
    auto all = std::move(levels).take();
    auto to_field = [&](std::size_t k, std::vector<double> values) {
        Field f = Field::zeros(spec.grid, spec.time.at(k));
        f.values = std::move(values);
        return f;
    };
    if (options.keep_history) {
        std::vector<Field> history;
        history.reserve(all.size());
        for (std::size_t k = 0; k < all.size(); ++k) history.push_back(to_field(k, all[k]));
        result.final = history.back();
        result.history = std::move(history);
    } else {
        result.final = to_field(all.size() - 1, std::move(all.back()));
    }
    return result;
}

}  // namespace

SolveResult1D solve_implicit_1d(const ProblemSpec1D& spec, const SolveOptions& options)
{
    const Setup s = prepare(spec);
    const std::size_t n = s.n;
    const std::size_t m = n - 1;
    const auto& g = *s.g;

    detail::TimeLevels levels(spec.gamma, spec.time.steps, initial_level(spec));
    DenseMatrix a;
    std::vector<double> rhs(m);

    for (std::size_t k = 0; k < spec.time.steps; ++k) {
        const double t = spec.time.at(k + 1);
        const double bl = spec.boundary_left(t);
        const double br = spec.boundary_right(t);

        a.reset(m, m);
        for (std::size_t i = 1; i < n; ++i) {
            const double x = spec.grid.node(i);
            const double w = s.scale * spec.c(x, t);
            const auto gi = g.row(i);
            auto ar = a.row(i - 1);
            for (std::size_t j = 1; j < n; ++j) ar[j - 1] = -w * gi[j];
            ar[i - 1] += 1.0;
            rhs[i - 1] = levels.memory(i) + s.mu * spec.f(x, t) + w * (gi[0] * bl + gi[n] * br);
        }

        std::vector<double> interior;
        try {
            interior = lu_solve(a, rhs);
        } catch (const Error& e) {
            throw StepError(e.kind(), std::string(e.what()) + " at step " + std::to_string(k + 1), k + 1);
        }
        std::vector<double> next(n + 1);
        next[0] = bl;
        next[n] = br;
        std::copy(interior.begin(), interior.end(), next.begin() + 1);
        levels.push(std::move(next));
    }
    return finish(spec, std::move(levels), options);
}

SolveResult1D solve_explicit_1d(const ProblemSpec1D& spec, const SolveOptions& options)
{
    const StabilityReport report = explicit_bound_1d(spec);
    if (!report.satisfied) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "explicit 1D step violates the stability bound: tau^gamma/dx^alpha = %.6g > %.6g",
                      report.actual, report.bound);
        detail::emit_warning(options, buf);
    }

    const Setup s = prepare(spec);
    const std::size_t n = s.n;
    const auto& g = *s.g;

    detail::TimeLevels levels(spec.gamma, spec.time.steps, initial_level(spec));
    for (std::size_t k = 0; k < spec.time.steps; ++k) {
        const double t = spec.time.at(k);
        const double t_next = spec.time.at(k + 1);
        const auto& u = levels.latest();
        std::vector<double> next(n + 1);
        next[0] = spec.boundary_left(t_next);
        next[n] = spec.boundary_right(t_next);
        for (std::size_t i = 1; i < n; ++i) {
            const double x = spec.grid.node(i);
            const auto gi = g.row(i);
            double coupling = 0.0;
            for (std::size_t j = 0; j <= n; ++j) coupling += gi[j] * u[j];
            next[i] = levels.memory(i) + s.scale * spec.c(x, t) * coupling + s.mu * spec.f(x, t);
        }
        levels.push(std::move(next));
    }
    return finish(spec, std::move(levels), options);
}

}  // namespace fracdiff
