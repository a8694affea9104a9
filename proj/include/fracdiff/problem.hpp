#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace fracdiff {

struct Grid1D {
    double left = 0.0;
    double right = 1.0;
    std::size_t cells = 3;

    double dx() const noexcept { return (right - left) / static_cast<double>(cells); }
    double node(std::size_t i) const noexcept { return left + static_cast<double>(i) * dx(); }
    std::size_t nodes() const noexcept { return cells + 1; }

    /// left < right, at least 3 cells.
    void validate() const;
};

struct Grid2D {
    Grid1D x;
    Grid1D y;
};

struct TimeGrid {
    double final_time = 1.0;
    std::size_t steps = 1;

    double tau() const noexcept { return final_time / static_cast<double>(steps); }
    double at(std::size_t k) const noexcept
    {
        return k == steps ? final_time : static_cast<double>(k) * tau();
    }

    void validate() const;
};

using SpaceFn = std::function<double(double x)>;
using TimeFn = std::function<double(double t)>;
using SpaceTimeFn = std::function<double(double x, double t)>;
using PlaneFn = std::function<double(double x, double y)>;
using PlaneTimeFn = std::function<double(double x, double y, double t)>;

/// D_t^gamma u = c(x,t) d^alpha u / d|x|^alpha + f(x,t) with Dirichlet data.
struct ProblemSpec1D {
    Grid1D grid;
    TimeGrid time;
    double gamma = 1.0;
    double alpha = 2.0;
    SpaceTimeFn c;
    SpaceTimeFn f;
    SpaceFn u0;
    TimeFn boundary_left;
    TimeFn boundary_right;
    std::optional<SpaceTimeFn> exact;

    /// Checks orders, grids, c >= 0 at every grid/time node and that the
    /// initial data agrees with the boundary data at t = 0 (1e-10).
    void validate() const;
};

/// D_t^gamma u = c d^alpha u/d|x|^alpha + d d^beta u/d|y|^beta + f on a rectangle.
struct ProblemSpec2D {
    Grid2D grid;
    TimeGrid time;
    double gamma = 1.0;
    double alpha = 2.0;
    double beta = 2.0;
    PlaneTimeFn c;
    PlaneTimeFn d;
    PlaneTimeFn f;
    PlaneFn u0;
    PlaneTimeFn boundary;
    std::optional<PlaneTimeFn> exact;

    void validate() const;
};

/// Nodal values including boundary nodes. 2D fields are row-major with the
/// y index fastest: values[i * (ny + 1) + j].
struct Field {
    Grid1D x;
    std::optional<Grid1D> y;
    std::vector<double> values;
    double time = 0.0;

    static Field zeros(const Grid1D& x, double time);
    static Field zeros(const Grid2D& g, double time);

    bool is_2d() const noexcept { return y.has_value(); }
    std::size_t stride() const noexcept { return y ? y->nodes() : 1; }

    double& at(std::size_t i) noexcept { return values[i]; }
    double at(std::size_t i) const noexcept { return values[i]; }
    double& at(std::size_t i, std::size_t j) noexcept { return values[i * stride() + j]; }
    double at(std::size_t i, std::size_t j) const noexcept { return values[i * stride() + j]; }

    double max_abs() const noexcept;
};

/// Manufactured 1D problem on [0,1] x (0, 1/2] with c = x^alpha t^(1-gamma) and
/// exact solution t^(2+gamma) x^2 (1-x)^2.
ProblemSpec1D benchmark_1d(double alpha, double gamma, std::size_t cells = 40, std::size_t steps = 20);

/// Manufactured 2D problem on [0,1]^2 x (0, 1/2] with c = 2 x^alpha y^beta t^(1-gamma),
/// d = 2 x^beta y^alpha t^(1-gamma) and exact solution t^(2+gamma) x^2(1-x)^2 y^2(1-y)^2.
ProblemSpec2D benchmark_2d(double alpha, double beta, double gamma, std::size_t cells = 10,
                           std::size_t steps = 5);

/// Exact solutions of the two benchmarks, exposed for oracles.
double benchmark_1d_exact(double gamma, double x, double t);
double benchmark_2d_exact(double gamma, double x, double y, double t);

double max_error(const Field& field, const SpaceTimeFn& exact, double t);
double max_error(const Field& field, const PlaneTimeFn& exact, double t);

/// CSV with a `# t=<time>` line followed by header `x,u` or `x,y,u`.
void write_field_csv(std::ostream& out, const Field& field);

}  // namespace fracdiff
