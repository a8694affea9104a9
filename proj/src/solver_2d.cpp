#include "fracdiff/solver_2d.hpp"

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
    std::size_t nx, ny;
    double mu;
    double scale_x, scale_y;
    std::shared_ptr<const DenseMatrix> gx, gy;
};

Setup prepare(const ProblemSpec2D& spec)
{
    spec.validate();
    const std::size_t nx = spec.grid.x.cells, ny = spec.grid.y.cells;
    const double mu = gamma_fn(2.0 - spec.gamma) * std::pow(spec.time.tau(), spec.gamma);
    const double sx = -mu * kappa(spec.alpha) / (gamma_fn(4.0 - spec.alpha) * std::pow(spec.grid.x.dx(), spec.alpha));
    const double sy = -mu * kappa(spec.beta) / (gamma_fn(4.0 - spec.beta) * std::pow(spec.grid.y.dx(), spec.beta));
    return {nx, ny, mu, sx, sy, riesz_weight_table(spec.alpha, nx), riesz_weight_table(spec.beta, ny)};
}

void fill_boundary(const ProblemSpec2D& spec, std::vector<double>& u, double t)
{
    const auto& gx = spec.grid.x;
    const auto& gy = spec.grid.y;
    const std::size_t nx = gx.cells, ny = gy.cells, st = ny + 1;
    for (std::size_t i = 0; i <= nx; ++i) {
        u[i * st] = spec.boundary(gx.node(i), gy.left, t);
        u[i * st + ny] = spec.boundary(gx.node(i), gy.right, t);
    }
    for (std::size_t j = 1; j < ny; ++j) {
        u[j] = spec.boundary(gx.left, gy.node(j), t);
        u[nx * st + j] = spec.boundary(gx.right, gy.node(j), t);
    }
}

std::vector<double> initial_level(const ProblemSpec2D& spec)
{
    const std::size_t nx = spec.grid.x.cells, ny = spec.grid.y.cells;
    std::vector<double> u((nx + 1) * (ny + 1));
    fill_boundary(spec, u, 0.0);
    for (std::size_t i = 1; i < nx; ++i)
        for (std::size_t j = 1; j < ny; ++j) u[i * (ny + 1) + j] = spec.u0(spec.grid.x.node(i), spec.grid.y.node(j));
    return u;
}

SolveResult2D finish(const ProblemSpec2D& spec, detail::TimeLevels&& levels, const SolveOptions& options)
{
    SolveResult2D result;
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

SolveResult2D solve_implicit_2d(const ProblemSpec2D& spec, const SolveOptions& options)
{
    const Setup s = prepare(spec);
    const std::size_t nx = s.nx, ny = s.ny, st = ny + 1, my = ny - 1;
    const std::size_t unknowns = (nx - 1) * my;
    const auto& gx = *s.gx;
    const auto& gy = *s.gy;

    detail::TimeLevels levels(spec.gamma, spec.time.steps, initial_level(spec));
    DenseMatrix a;
    std::vector<double> rhs(unknowns);
    std::vector<double> residuals;
    residuals.reserve(spec.time.steps);

    for (std::size_t k = 0; k < spec.time.steps; ++k) {
        const double t = spec.time.at(k + 1);
        std::vector<double> next(levels.latest().size());
        fill_boundary(spec, next, t);

        a.reset(unknowns, unknowns);
        for (std::size_t i = 1; i < nx; ++i) {
            const double x = spec.grid.x.node(i);
            const auto gxi = gx.row(i);
            for (std::size_t j = 1; j < ny; ++j) {
                const double y = spec.grid.y.node(j);
                const std::size_t r = (i - 1) * my + (j - 1);
                const double wx = s.scale_x * spec.c(x, y, t);
                const double wy = s.scale_y * spec.d(x, y, t);
                const auto gyj = gy.row(j);
                auto ar = a.row(r);
                for (std::size_t m = 1; m < nx; ++m) ar[(m - 1) * my + (j - 1)] -= wx * gxi[m];
                for (std::size_t m = 1; m < ny; ++m) ar[(i - 1) * my + (m - 1)] -= wy * gyj[m];
                ar[r] += 1.0;
                rhs[r] = levels.memory(i * st + j) + s.mu * spec.f(x, y, t) +
                         wx * (gxi[0] * next[j] + gxi[nx] * next[nx * st + j]) +
                         wy * (gyj[0] * next[i * st] + gyj[ny] * next[i * st + ny]);
            }
        }

        std::vector<double> interior;
        try {
            interior = lu_solve(a, rhs);
        } catch (const Error& e) {
            throw StepError(e.kind(), std::string(e.what()) + " at step " + std::to_string(k + 1), k + 1);
        }
        const auto ax = matvec(a, interior);
        double res = 0.0;
        for (std::size_t r = 0; r < unknowns; ++r) res = std::max(res, std::abs(ax[r] - rhs[r]));
        residuals.push_back(res);

        for (std::size_t i = 1; i < nx; ++i)
            for (std::size_t j = 1; j < ny; ++j) next[i * st + j] = interior[(i - 1) * my + (j - 1)];
        levels.push(std::move(next));
    }
    SolveResult2D result = finish(spec, std::move(levels), options);
    result.residuals = std::move(residuals);
    return result;
}

SolveResult2D solve_explicit_2d(const ProblemSpec2D& spec, const SolveOptions& options)
{
    const StabilityReport report = explicit_bound_2d(spec);
    if (!report.satisfied) {
        char buf[192];
        std::snprintf(buf, sizeof buf,
                      "explicit 2D step violates the stability bound: tau^gamma/dx^alpha + tau^gamma/dy^beta = %.6g > %.6g",
                      report.actual, report.bound);
        detail::emit_warning(options, buf);
    }

    const Setup s = prepare(spec);
    const std::size_t nx = s.nx, ny = s.ny, st = ny + 1;
    const auto& gx = *s.gx;
    const auto& gy = *s.gy;

    detail::TimeLevels levels(spec.gamma, spec.time.steps, initial_level(spec));
    for (std::size_t k = 0; k < spec.time.steps; ++k) {
        const double t = spec.time.at(k);
        const auto& u = levels.latest();
        std::vector<double> next(u.size());
        fill_boundary(spec, next, spec.time.at(k + 1));
        for (std::size_t i = 1; i < nx; ++i) {
            const double x = spec.grid.x.node(i);
            const auto gxi = gx.row(i);
            for (std::size_t j = 1; j < ny; ++j) {
                const double y = spec.grid.y.node(j);
                const auto gyj = gy.row(j);
                double cx = 0.0, cy = 0.0;
                for (std::size_t m = 0; m <= nx; ++m) cx += gxi[m] * u[m * st + j];
                for (std::size_t m = 0; m <= ny; ++m) cy += gyj[m] * u[i * st + m];
                next[i * st + j] = levels.memory(i * st + j) + s.scale_x * spec.c(x, y, t) * cx +
                                   s.scale_y * spec.d(x, y, t) * cy + s.mu * spec.f(x, y, t);
            }
        }
        levels.push(std::move(next));
    }
    return finish(spec, std::move(levels), options);
}

}  // namespace fracdiff
