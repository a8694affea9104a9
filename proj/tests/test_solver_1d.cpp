#include "fracdiff/error.hpp"
#include "fracdiff/solver_1d.hpp"
#include "fracdiff/stability.hpp"
#include "heat_oracle.hpp"

#include "perturbation.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>

using namespace fracdiff;

namespace {

ProblemSpec1D zero_problem(double alpha, double gamma, std::size_t n, std::size_t steps)
{
    ProblemSpec1D s;
    s.grid = Grid1D{0.0, 1.0, n};
    s.time = TimeGrid{0.5, steps};
    s.gamma = gamma;
    s.alpha = alpha;
    s.c = [](double x, double t) { return 1.0 + x * t; };
    s.f = [](double, double) { return 0.0; };
    s.u0 = [](double) { return 0.0; };
    s.boundary_left = [](double) { return 0.0; };
    s.boundary_right = [](double) { return 0.0; };
    return s;
}

}  // namespace

TEST_SUITE("solver_1d") {

TEST_CASE("zero data stays zero")
{
    const auto s = zero_problem(1.5, 0.6, 12, 8);
    SolveOptions o;
    o.keep_history = true;
    for (const auto& r : {solve_implicit_1d(s, o), solve_explicit_1d(s, o)}) {
        REQUIRE(r.history);
        CHECK(r.history->size() == 9);
        for (const auto& f : *r.history)
            for (double v : f.values) CHECK(v == 0.0);
        CHECK(r.max_abs.size() == 9);
    }
}

TEST_CASE("history is optional and final time is exact")
{
    const auto s = benchmark_1d(1.2, 0.9, 20, 10);
    const auto r = solve_implicit_1d(s);
    CHECK_FALSE(r.history);
    CHECK(r.final.time == 0.5);
    CHECK(r.final.values.size() == 21);
    CHECK(r.final.at(0) == 0.0);
    CHECK(r.final.at(20) == 0.0);
}

TEST_CASE("benchmark error at N = 40 matches the published value")
{
    const auto s = benchmark_1d(1.2, 0.9, 40, 20);
    const double err = max_error(solve_implicit_1d(s).final, *s.exact, 0.5);
    CHECK(std::abs(err - 3.1438e-4) / 3.1438e-4 < 0.02);
}

TEST_CASE("classical limit agrees with a backward-Euler heat solver")
{
    ProblemSpec1D s;
    s.grid = Grid1D{0.0, 1.0, 40};
    s.time = TimeGrid{0.3, 37};
    s.gamma = 1.0;
    s.alpha = 2.0;
    s.c = [](double x, double t) { return 0.5 + x * (1.0 - x) + t; };
    s.f = [](double x, double t) { return std::sin(3.0 * x) * std::exp(-t); };
    s.u0 = [](double x) { return std::sin(std::numbers::pi * x) + x; };
    s.boundary_left = [](double t) { return 0.2 * t; };
    s.boundary_right = [](double t) { return 1.0 - t * t; };

    const auto r = solve_implicit_1d(s);
    const auto ref = heat_backward_euler(0.0, 1.0, 40, 0.3, 37, s.c, s.f, s.u0, s.boundary_left, s.boundary_right);
    for (std::size_t i = 0; i <= 40; ++i) CHECK(std::abs(r.final.at(i) - ref[i]) <= 1e-10);
}

TEST_CASE("linearity in the source")
{
    auto s1 = zero_problem(1.4, 0.5, 16, 12);
    auto s2 = s1;
    auto s12 = s1;
    s1.f = [](double x, double t) { return x * (1 - x) * (1 + t); };
    s2.f = [](double x, double t) { return std::cos(5 * x) * t; };
    s12.f = [&](double x, double t) { return s1.f(x, t) + s2.f(x, t); };
    const auto a = solve_implicit_1d(s1).final, b = solve_implicit_1d(s2).final, ab = solve_implicit_1d(s12).final;
    for (std::size_t i = 0; i <= 16; ++i) CHECK(std::abs(a.at(i) + b.at(i) - ab.at(i)) <= 1e-10);
}

TEST_CASE("implicit perturbations never grow")
{
    for (double alpha : {1.2, 1.5, 1.9}) {
        for (double gamma : {0.3, 0.9, 1.0}) {
            for (std::size_t n : {10u, 40u}) {
                const double dx = 1.0 / n;
                for (double tau : {dx / 4, dx, 10 * dx}) {
                    auto s = benchmark_1d(alpha, gamma, n, std::max<std::size_t>(1, std::llround(0.5 / tau)));
                    CAPTURE(alpha);
                    CAPTURE(gamma);
                    CAPTURE(n);
                    CHECK(perturbation_growth_1d(s, true, 11) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("explicit perturbations never grow under the bound")
{
    const std::pair<double, double> cases[] = {{1.2, 0.5}, {1.5, 0.5}, {1.2, 0.9}, {1.5, 0.9}, {1.9, 0.9}};
    for (const auto& [alpha, gamma] : cases) {
        const std::size_t n = 20;
        auto s = benchmark_1d(alpha, gamma, n, 1);
        const auto r = explicit_bound_1d(s);
        const double tau = 0.5 * std::pow(0.95 * r.bound / r.actual, 1.0 / gamma);
        s.time.steps = static_cast<std::size_t>(std::ceil(0.5 / tau));
        REQUIRE(explicit_bound_1d(s).satisfied);
        CHECK(perturbation_growth_1d(s, false, 5) <= 1e-12);
    }
}

TEST_CASE("explicit scheme warns outside the bound and blows up far outside it")
{
    auto s = benchmark_1d(1.5, 0.5, 40, 1);
    const double bound = explicit_bound_1d(s).bound;
    const double tau = std::pow(50.0 * bound * std::pow(1.0 / 40, 1.5), 1.0 / 0.5);
    s.time.steps = static_cast<std::size_t>(std::ceil(0.5 / tau));
    std::vector<std::string> warnings;
    SolveOptions o;
    o.warn = [&](std::string_view w) { warnings.emplace_back(w); };
    const auto r = solve_explicit_1d(s, o);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("stability bound") != std::string::npos);
    bool exceeded = false;
    for (std::size_t k = 0; k + 1 < r.max_abs.size(); ++k) exceeded = exceeded || r.max_abs[k] > 1e6;
    CHECK(exceeded);
}

TEST_CASE("non-finite values report the step")
{
    auto s = benchmark_1d(1.5, 0.5, 200, 3);
    s.f = [](double, double t) { return t > 0.2 ? std::numeric_limits<double>::infinity() : 0.0; };
    try {
        SolveOptions quiet;
        quiet.warn = [](std::string_view) {};
        solve_explicit_1d(s, quiet);
        FAIL("expected a step error");
    } catch (const StepError& e) {
        CHECK(e.kind() == ErrorKind::NonFinite);
        CHECK(e.step() == 3);
    }
}

TEST_CASE("explicit scheme needs alpha above 1")
{
    const auto s = benchmark_1d(0.5, 0.5, 10, 5);
    try {
        solve_explicit_1d(s);
        FAIL("expected order-range error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OrderRange);
    }
    CHECK_NOTHROW(solve_implicit_1d(s));
}

}
