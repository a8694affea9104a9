#include "fracdiff/problem.hpp"

#include "fracdiff/coefficients.hpp"
#include "fracdiff/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

namespace fracdiff {

namespace {

constexpr double kFinalTime = 0.5;
constexpr double kCompatTol = 1e-10;

void require_time_order(double gamma)
{
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw Error(ErrorKind::InvalidOrder, "time order must lie in (0, 1], got " + std::to_string(gamma));
}

void require_nonnegative(double value, const char* name, double t)
{
    if (!std::isfinite(value) || value < 0.0)
        throw Error(ErrorKind::Domain, std::string("coefficient ") + name + " must be nonnegative and finite; got " +
                                           std::to_string(value) + " at t=" + std::to_string(t));
}

// Riesz derivative of x^2 (1-x)^2 on [0,1], up to the factor -1/cos(nu*pi/2):
// the sum of both one-sided power-law derivatives divided by two.
struct PowerBracket {
    double nu;
    double g3, g4, g5;

    explicit PowerBracket(double order)
        : nu(order), g3(gamma_fn(3.0 - order)), g4(gamma_fn(4.0 - order)), g5(gamma_fn(5.0 - order)) {}

    double operator()(double z) const
    {
        const double w = 1.0 - z;
        return (std::pow(z, 2.0 - nu) + std::pow(w, 2.0 - nu)) / g3 -
               6.0 * (std::pow(z, 3.0 - nu) + std::pow(w, 3.0 - nu)) / g4 +
               12.0 * (std::pow(z, 4.0 - nu) + std::pow(w, 4.0 - nu)) / g5;
    }
};

double bump(double z) { return z * z * (1.0 - z) * (1.0 - z); }

void require_benchmark_orders(std::initializer_list<double> space, double gamma)
{
    try {
        require_time_order(gamma);
        for (double nu : space) require_space_order(nu);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidOrder, e.what());
    }
}

}  // namespace

void Grid1D::validate() const
{
    if (!(left < right) || !std::isfinite(left) || !std::isfinite(right))
        throw Error(ErrorKind::Domain, "grid needs left < right");
    if (cells < 3) throw Error(ErrorKind::Domain, "grid needs at least 3 cells, got " + std::to_string(cells));
}

void TimeGrid::validate() const
{
    if (!(final_time > 0.0) || !std::isfinite(final_time))
        throw Error(ErrorKind::Domain, "final time must be positive");
    if (steps < 1) throw Error(ErrorKind::Domain, "need at least one time step");
}

void ProblemSpec1D::validate() const
{
    grid.validate();
    time.validate();
    require_time_order(gamma);
    require_space_order(alpha);
    if (!c || !f || !u0 || !boundary_left || !boundary_right)
        throw Error(ErrorKind::Domain, "problem is missing a coefficient, source, initial or boundary function");

    for (std::size_t k = 0; k <= time.steps; ++k) {
        const double t = time.at(k);
        for (std::size_t i = 0; i <= grid.cells; ++i) require_nonnegative(c(grid.node(i), t), "c", t);
    }
    if (std::abs(u0(grid.left) - boundary_left(0.0)) > kCompatTol ||
        std::abs(u0(grid.right) - boundary_right(0.0)) > kCompatTol)
        throw Error(ErrorKind::Domain, "initial data disagrees with boundary data at t=0");
}

void ProblemSpec2D::validate() const
{
    grid.x.validate();
    grid.y.validate();
    time.validate();
    require_time_order(gamma);
    require_space_order(alpha);
    require_space_order(beta);
    if (!c || !d || !f || !u0 || !boundary)
        throw Error(ErrorKind::Domain, "problem is missing a coefficient, source, initial or boundary function");

    const std::size_t nx = grid.x.cells, ny = grid.y.cells;
    for (std::size_t k = 0; k <= time.steps; ++k) {
        const double t = time.at(k);
        for (std::size_t i = 0; i <= nx; ++i) {
            for (std::size_t j = 0; j <= ny; ++j) {
                const double x = grid.x.node(i), y = grid.y.node(j);
                require_nonnegative(c(x, y, t), "c", t);
                require_nonnegative(d(x, y, t), "d", t);
            }
        }
    }
    for (std::size_t i = 0; i <= nx; ++i) {
        for (std::size_t j = 0; j <= ny; ++j) {
            if (i != 0 && i != nx && j != 0 && j != ny) continue;
            const double x = grid.x.node(i), y = grid.y.node(j);
            if (std::abs(u0(x, y) - boundary(x, y, 0.0)) > kCompatTol)
                throw Error(ErrorKind::Domain, "initial data disagrees with boundary data at t=0");
        }
    }
}

Field Field::zeros(const Grid1D& x, double time)
{
    return Field{x, std::nullopt, std::vector<double>(x.nodes(), 0.0), time};
}

Field Field::zeros(const Grid2D& g, double time)
{
    return Field{g.x, g.y, std::vector<double>(g.x.nodes() * g.y.nodes(), 0.0), time};
}

double Field::max_abs() const noexcept
{
    double best = 0.0;
    for (double v : values) best = std::max(best, std::abs(v));
    return best;
}

double benchmark_1d_exact(double gamma, double x, double t) { return std::pow(t, 2.0 + gamma) * bump(x); }

double benchmark_2d_exact(double gamma, double x, double y, double t)
{
    return std::pow(t, 2.0 + gamma) * bump(x) * bump(y);
}

ProblemSpec1D benchmark_1d(double alpha, double gamma, std::size_t cells, std::size_t steps)
{
    require_benchmark_orders({alpha}, gamma);

    const double caputo = 0.5 * gamma_fn(3.0 + gamma);
    const double cos_a = std::cos(alpha * std::numbers::pi / 2.0);
    const PowerBracket bracket(alpha);

    ProblemSpec1D spec;
    spec.grid = {0.0, 1.0, cells};
    spec.time = {kFinalTime, steps};
    spec.gamma = gamma;
    spec.alpha = alpha;
    spec.c = [=](double x, double t) { return std::pow(x, alpha) * std::pow(t, 1.0 - gamma); };
    spec.f = [=](double x, double t) {
        return caputo * t * t * bump(x) + t * t * t * std::pow(x, alpha) / cos_a * bracket(x);
    };
    spec.u0 = [](double) { return 0.0; };
    spec.boundary_left = [](double) { return 0.0; };
    spec.boundary_right = [](double) { return 0.0; };
    spec.exact = [=](double x, double t) { return benchmark_1d_exact(gamma, x, t); };
    return spec;
}

ProblemSpec2D benchmark_2d(double alpha, double beta, double gamma, std::size_t cells, std::size_t steps)
{
    require_benchmark_orders({alpha, beta}, gamma);

    const double caputo = 0.5 * gamma_fn(3.0 + gamma);
    const double cos_a = std::cos(alpha * std::numbers::pi / 2.0);
    const double cos_b = std::cos(beta * std::numbers::pi / 2.0);
    const PowerBracket bx(alpha);
    const PowerBracket by(beta);
    const double decay = 1.0 - gamma;

    ProblemSpec2D spec;
    spec.grid = {{0.0, 1.0, cells}, {0.0, 1.0, cells}};
    spec.time = {kFinalTime, steps};
    spec.gamma = gamma;
    spec.alpha = alpha;
    spec.beta = beta;
    spec.c = [=](double x, double y, double t) {
        return 2.0 * std::pow(x, alpha) * std::pow(y, beta) * std::pow(t, decay);
    };
    spec.d = [=](double x, double y, double t) {
        return 2.0 * std::pow(x, beta) * std::pow(y, alpha) * std::pow(t, decay);
    };
    // The factor 2 in the fractional terms comes from the factor 2 in c and d.
    spec.f = [=](double x, double y, double t) {
        const double t3 = t * t * t;
        return caputo * t * t * bump(x) * bump(y) +
               2.0 * t3 * std::pow(x, alpha) * std::pow(y, 2.0 + beta) * (y - 1.0) * (y - 1.0) / cos_a * bx(x) +
               2.0 * t3 * std::pow(x, 2.0 + beta) * (x - 1.0) * (x - 1.0) * std::pow(y, alpha) / cos_b * by(y);
    };
    spec.u0 = [](double, double) { return 0.0; };
    spec.boundary = [](double, double, double) { return 0.0; };
    spec.exact = [=](double x, double y, double t) { return benchmark_2d_exact(gamma, x, y, t); };
    return spec;
}

double max_error(const Field& field, const SpaceTimeFn& exact, double t)
{
    double best = 0.0;
    for (std::size_t i = 0; i < field.x.nodes(); ++i)
        best = std::max(best, std::abs(field.at(i) - exact(field.x.node(i), t)));
    return best;
}

double max_error(const Field& field, const PlaneTimeFn& exact, double t)
{
    if (!field.y) throw Error(ErrorKind::Dimension, "max_error: 2D exact solution given for a 1D field");
    double best = 0.0;
    for (std::size_t i = 0; i < field.x.nodes(); ++i)
        for (std::size_t j = 0; j < field.y->nodes(); ++j)
            best = std::max(best, std::abs(field.at(i, j) - exact(field.x.node(i), field.y->node(j), t)));
    return best;
}

void write_field_csv(std::ostream& out, const Field& field)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "# t=%.17g\n", field.time);
    out << buf;
    if (!field.y) {
        out << "x,u\n";
        for (std::size_t i = 0; i < field.x.nodes(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", field.x.node(i), field.at(i));
            out << buf;
        }
        return;
    }
    out << "x,y,u\n";
    for (std::size_t i = 0; i < field.x.nodes(); ++i) {
        for (std::size_t j = 0; j < field.y->nodes(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", field.x.node(i), field.y->node(j), field.at(i, j));
            out << buf;
        }
    }
}

}  // namespace fracdiff
