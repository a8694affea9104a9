#include "fracdiff/stability.hpp"

#include "fracdiff/coefficients.hpp"
#include "fracdiff/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

namespace fracdiff {

namespace {

constexpr double kMinOrder = 1.0 + 1e-6;

void require_bound_order(double nu, const char* name)
{
    if (!(nu >= kMinOrder && nu <= 2.0))
        throw Error(ErrorKind::OrderRange, std::string("explicit stability bound needs ") + name +
                                               " in (1, 2], got " + std::to_string(nu));
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

bool StabilityReport::unconditional() const noexcept { return std::isinf(bound); }

StabilityReport explicit_bound_1d(const ProblemSpec1D& spec)
{
    require_bound_order(spec.alpha, "alpha");
    spec.validate();

    const double alpha = spec.alpha, gamma = spec.gamma;
    double c_max = 0.0;
    for (std::size_t k = 0; k <= spec.time.steps; ++k)
        for (std::size_t i = 0; i <= spec.grid.cells; ++i)
            c_max = std::max(c_max, spec.c(spec.grid.node(i), spec.time.at(k)));

    StabilityReport r;
    r.scheme = "explicit-1D";
    r.c_max = c_max;
    r.actual = std::pow(spec.time.tau(), gamma) / std::pow(spec.grid.dx(), alpha);
    if (c_max == 0.0) {
        r.bound = std::numeric_limits<double>::infinity();
    } else {
        r.bound = -gamma_fn(4.0 - alpha) * (1.0 - std::pow(2.0, -gamma)) /
                  (4.0 * kappa(alpha) * c_max * gamma_fn(2.0 - gamma) * (1.0 - std::pow(2.0, 1.0 - alpha)));
    }
    r.satisfied = r.actual <= r.bound;
    return r;
}

StabilityReport explicit_bound_2d(const ProblemSpec2D& spec)
{
    require_bound_order(spec.alpha, "alpha");
    require_bound_order(spec.beta, "beta");
    spec.validate();

    const double alpha = spec.alpha, beta = spec.beta, gamma = spec.gamma;
    const double wx = -kappa(alpha) * (4.0 - std::pow(2.0, 3.0 - alpha)) / gamma_fn(4.0 - alpha);
    const double wy = -kappa(beta) * (4.0 - std::pow(2.0, 3.0 - beta)) / gamma_fn(4.0 - beta);

    StabilityReport r;
    r.scheme = "explicit-2D";
    const auto& gx = spec.grid.x;
    const auto& gy = spec.grid.y;
    for (std::size_t k = 0; k <= spec.time.steps; ++k) {
        const double t = spec.time.at(k);
        for (std::size_t i = 0; i <= gx.cells; ++i) {
            for (std::size_t j = 0; j <= gy.cells; ++j) {
                const double c = spec.c(gx.node(i), gy.node(j), t);
                const double d = spec.d(gx.node(i), gy.node(j), t);
                r.c_max = std::max(r.c_max, c);
                r.d_max = std::max(r.d_max, d);
                r.bracket_max = std::max({r.bracket_max, wx * c, wy * d});
            }
        }
    }

    const double tg = std::pow(spec.time.tau(), gamma);
    r.actual = tg / std::pow(gx.dx(), alpha) + tg / std::pow(gy.dx(), beta);
    if (r.bracket_max == 0.0)
        r.bound = std::numeric_limits<double>::infinity();
    else
        r.bound = (1.0 - std::pow(2.0, -gamma)) / (gamma_fn(2.0 - gamma) * r.bracket_max);
    r.satisfied = r.actual <= r.bound;
    return r;
}

void write_report(std::ostream& out, const StabilityReport& r)
{
    out << "scheme:    " << r.scheme << '\n'
        << "actual:    " << fmt(r.actual) << '\n'
        << "bound:     " << (r.unconditional() ? std::string("unconditional") : fmt(r.bound)) << '\n'
        << "satisfied: " << (r.satisfied ? "yes" : "no") << '\n'
        << "c_max:     " << fmt(r.c_max) << '\n';
    if (r.scheme == "explicit-2D")
        out << "d_max:     " << fmt(r.d_max) << '\n' << "C_max:     " << fmt(r.bracket_max) << '\n';
}

void write_report_csv(std::ostream& out, const StabilityReport& r, bool header)
{
    if (header) out << "scheme,bound,actual,satisfied,c_max,d_max,bracket_max\n";
    out << r.scheme << ',' << (r.unconditional() ? std::string("inf") : fmt(r.bound)) << ',' << fmt(r.actual) << ','
        << (r.satisfied ? "true" : "false") << ',' << fmt(r.c_max) << ',' << fmt(r.d_max) << ','
        << fmt(r.bracket_max) << '\n';
}

}  // namespace fracdiff
