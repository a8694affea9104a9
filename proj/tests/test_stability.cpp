#include "fracdiff/error.hpp"
#include "fracdiff/stability.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace fracdiff;

namespace {

ProblemSpec1D constant_c(double gamma, double alpha, double c)
{
    ProblemSpec1D s = benchmark_1d(alpha, gamma, 20, 40);
    s.c = [c](double, double) { return c; };
    return s;
}

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("classical limit reproduces the heat CFL constant")
{
    for (double c : {0.25, 1.0, 3.0}) {
        const auto r = explicit_bound_1d(constant_c(1.0, 2.0, c));
        CHECK(std::abs(r.bound - 0.5 / c) <= 1e-12 * (0.5 / c));
        CHECK(r.c_max == c);
        CHECK(r.actual == doctest::Approx((0.5 / 40) / (1.0 / 400)).epsilon(1e-14));
    }
}

TEST_CASE("bound scales like 1/C and is positive")
{
    const auto a = explicit_bound_1d(constant_c(0.5, 1.5, 1.0));
    const auto b = explicit_bound_1d(constant_c(0.5, 1.5, 2.0));
    CHECK(b.bound == doctest::Approx(a.bound / 2.0).epsilon(1e-14));
    const auto bench = explicit_bound_1d(benchmark_1d(1.5, 0.5, 40, 20));
    CHECK(bench.bound > 0.0);
    CHECK(std::isfinite(bench.bound));
    CHECK(bench.c_max == doctest::Approx(std::pow(0.5, 0.5)).epsilon(1e-14));
    CHECK(bench.satisfied == (bench.actual <= bench.bound));
}

TEST_CASE("zero coefficients are unconditional")
{
    auto s = constant_c(0.7, 1.5, 0.0);
    CHECK(explicit_bound_1d(s).unconditional());
    CHECK(explicit_bound_1d(s).satisfied);

    auto s2 = benchmark_2d(1.5, 1.5, 0.5, 8, 4);
    s2.c = s2.d = [](double, double, double) { return 0.0; };
    const auto r = explicit_bound_2d(s2);
    CHECK(r.unconditional());
    std::ostringstream os;
    write_report(os, r);
    CHECK(os.str().find("unconditional") != std::string::npos);
}

TEST_CASE("2D actual ratio and brute-force bracket maximization")
{
    auto s = benchmark_2d(1.6, 1.6, 0.5, 10, 5);
    s.c = s.d = [](double, double, double) { return 1.0; };
    const auto r = explicit_bound_2d(s);
    const double one = std::pow(0.1, 0.5) / std::pow(0.1, 1.6);
    CHECK(r.actual == doctest::Approx(2.0 * one).epsilon(1e-14));

    const auto b = benchmark_2d(1.8, 1.7, 0.5, 10, 5);
    const auto rb = explicit_bound_2d(b);
    const double ka = 1.0 / (2.0 * std::cos(1.8 * std::numbers::pi / 2)), kb = 1.0 / (2.0 * std::cos(1.7 * std::numbers::pi / 2));
    double cmax = 0.0;
    for (int k = 0; k <= 5; ++k)
        for (int i = 0; i <= 10; ++i)
            for (int j = 0; j <= 10; ++j) {
                const double x = i / 10.0, y = j / 10.0, t = k * 0.1;
                cmax = std::max(cmax, -ka * (4 - std::pow(2.0, 3 - 1.8)) * b.c(x, y, t) / std::tgamma(4 - 1.8));
                cmax = std::max(cmax, -kb * (4 - std::pow(2.0, 3 - 1.7)) * b.d(x, y, t) / std::tgamma(4 - 1.7));
            }
    CHECK(rb.bracket_max == doctest::Approx(cmax).epsilon(1e-13));
    CHECK(rb.bound == doctest::Approx((1 - std::pow(2.0, -0.5)) / (std::tgamma(1.5) * cmax)).epsilon(1e-13));
}

TEST_CASE("orders at or below one are rejected")
{
    try {
        explicit_bound_1d(benchmark_1d(0.5, 0.5, 10, 5));
        FAIL("expected order-range");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OrderRange);
        CHECK(e.category() == "order-range");
    }
    CHECK_THROWS_AS(explicit_bound_2d(benchmark_2d(1.5, 0.8, 0.5, 6, 3)), Error);
}

TEST_CASE("csv report")
{
    std::ostringstream os;
    write_report_csv(os, explicit_bound_1d(constant_c(1.0, 2.0, 1.0)));
    CHECK(os.str().rfind("scheme,bound,actual,satisfied,c_max,d_max,bracket_max\nexplicit-1D,0.5,", 0) == 0);
}

}
