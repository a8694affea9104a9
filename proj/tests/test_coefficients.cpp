#include "fracdiff/coefficients.hpp"
#include "fracdiff/error.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>

using namespace fracdiff;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Closed-form Riesz derivative of x^2 (1-x)^2 on [0, 1] from the power rule.
double riesz_of_quartic(double x, double nu)
{
    auto side = [nu](double z) {
        return 2.0 * std::pow(z, 2.0 - nu) / std::tgamma(3.0 - nu) - 12.0 * std::pow(z, 3.0 - nu) / std::tgamma(4.0 - nu) +
               24.0 * std::pow(z, 4.0 - nu) / std::tgamma(5.0 - nu);
    };
    return -kappa(nu) * (side(x) + side(1.0 - x));
}

}  // namespace

TEST_SUITE("coefficients") {

TEST_CASE("gamma_fn against arbitrary-precision references")
{
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel(gamma_fn(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
    CHECK(rel(gamma_fn(2.8), 1.676490787764436858) < 1e-14);
    CHECK(rel(gamma_fn(0.1), 9.5135076986687318363) < 1e-14);
    CHECK(rel(gamma_fn(1.5), 0.88622692545275801365) < 1e-14);
    CHECK(rel(gamma_fn(3.9), 5.2993297338097046809) < 1e-14);
    CHECK(rel(gamma_fn(4.2), 7.7566895357931776387) < 1e-14);
    CHECK(rel(gamma_fn(19.5), 27724322986333718.178) < 1e-14);
    CHECK(rel(gamma_fn(0.001), 999.42377248459546611) < 1e-14);
    CHECK_THROWS_AS(gamma_fn(0.0), Error);
    CHECK_THROWS_AS(gamma_fn(-1.5), Error);
}

TEST_CASE("caputo weights: examples")
{
    const auto w = caputo_weights(0.5, 4);
    CHECK(w.size() == 5);
    CHECK(w[0] == 1.0);
    CHECK(w[1] == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));

    const auto one = caputo_weights(1.0, 6);
    CHECK(one[0] == 1.0);
    for (std::size_t s = 1; s < one.size(); ++s) CHECK(one[s] == 0.0);

    CHECK_THROWS_AS(caputo_weights(0.0, 3), Error);
    CHECK_THROWS_AS(caputo_weights(1.2, 3), Error);
}

TEST_CASE("caputo weights: positivity, monotonicity, partition and decay bracket")
{
    const std::size_t K = 10000;
    for (double g : {0.1, 0.5, 0.9, 1.0}) {
        CAPTURE(g);
        const auto l = caputo_weights(g, K);
        bool positive = true, decreasing = true, partition = true, bracket = true;
        double tail = 0.0;  // sum_{s=1}^{k-1} (l_s - l_{s+1})
        for (std::size_t k = 1; k <= K; ++k) {
            if (g < 1.0) {
                positive = positive && l[k] > 0.0;
                decreasing = decreasing && l[k - 1] > l[k];
                // l_k k^gamma / (1 - gamma) -> 1 from below; bounded away from 0 and infinity.
                const double scaled = l[k] * std::pow(static_cast<double>(k), g) / (1.0 - g);
                bracket = bracket && scaled >= 0.5 && scaled <= 2.0;
            }
            if (k >= 2) tail += l[k - 1] - l[k];
            partition = partition && std::abs((1.0 - l[1]) + tail + l[k] - 1.0) <= 1e-12;
        }
        CHECK(positive);
        CHECK(decreasing);
        CHECK(partition);
        CHECK(bracket);
    }
}

TEST_CASE("kappa and order checks")
{
    CHECK(kappa(2.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(kappa(1.5) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(kappa(0.5) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(kappa(1.0), Error);
    try {
        require_space_order(1.0 + 1e-9);
        FAIL("expected singular order");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularOrder);
    }
    try {
        require_space_order(2.5);
        FAIL("expected invalid order");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidOrder);
    }
    CHECK_NOTHROW(require_space_order(0.3));
}

TEST_CASE("left and right rows: closed-form entries and reflection")
{
    for (double nu : {1.1, 1.5, 1.9}) {
        const std::size_t n = 9;
        for (std::size_t i = 1; i < n; ++i) {
            const auto p = left_rl_row(nu, i, n);
            const auto q = right_rl_row(nu, i, n);
            CHECK(p[i + 1] == 1.0);
            CHECK(q[i - 1] == 1.0);
            CHECK(p[i] == doctest::Approx(std::pow(2.0, 3.0 - nu) - 4.0).epsilon(1e-14));
            CHECK(q[i] == doctest::Approx(std::pow(2.0, 3.0 - nu) - 4.0).epsilon(1e-14));
            for (std::size_t m = i + 2; m <= n; ++m) CHECK(p[m] == 0.0);
            for (std::size_t m = 0; m + 1 < i; ++m) CHECK(q[m] == 0.0);
            const auto mirror = left_rl_row(nu, n - i, n);
            for (std::size_t m = 0; m <= n; ++m) CHECK(q[m] == doctest::Approx(mirror[n - m]).epsilon(1e-14));
        }
    }
    const auto p2 = left_rl_row(2.0, 5, 9);
    for (std::size_t m = 0; m + 2 <= 5; ++m) CHECK(std::abs(p2[m]) < 1e-13);

    CHECK_THROWS_AS(left_rl_row(1.5, 0, 9), Error);
    CHECK_THROWS_AS(left_rl_row(1.5, 9, 9), Error);
    CHECK_THROWS_AS(right_rl_row(1.5, 1, 2), Error);
}

TEST_CASE("riesz rows: sign structure and row sums")
{
    for (double nu : {1.1, 1.2, 1.5, 1.8, 1.9, 2.0}) {
        for (std::size_t n : {5u, 9u, 17u}) {
            CAPTURE(nu);
            CAPTURE(n);
            for (std::size_t i = 1; i < n; ++i) {
                const auto g = riesz_row(nu, i, n).weights;
                double sum = 0.0;
                for (double v : g) sum += v;
                CHECK(g[i] == doctest::Approx(std::pow(2.0, 4.0 - nu) - 8.0).epsilon(1e-13));
                CHECK(g[i] < 0.0);
                if (nu < 2.0) {
                    for (std::size_t m = 0; m <= n; ++m)
                        if (m != i) CHECK(g[m] > 0.0);
                    CHECK(sum < 0.0);
                    CHECK(-g[i] > sum - g[i]);
                } else {
                    CHECK(sum <= 1e-13);
                }
                if (i >= 2 && i + 2 <= n) {
                    const double side = 7.0 - std::pow(2.0, 5.0 - nu) + std::pow(3.0, 3.0 - nu);
                    CHECK(g[i - 1] == doctest::Approx(side).epsilon(1e-13));
                    CHECK(g[i + 1] == doctest::Approx(side).epsilon(1e-13));
                }
            }
        }
    }
    const std::size_t n = 10;
    for (std::size_t i = 1; i < n; ++i) {
        double sum = 0.0;
        for (double v : riesz_row(1.5, i, n).weights) sum += v;
        CHECK(sum < 0.0);
    }
}

TEST_CASE("left interior block is the transpose of the right one")
{
    for (double nu : {0.3, 1.1, 1.5, 1.9, 2.0}) {
        for (std::size_t n : {5u, 9u, 17u, 40u}) {
            double worst = 0.0;
            for (std::size_t i = 1; i < n; ++i) {
                const auto p = left_rl_row(nu, i, n);
                for (std::size_t m = 1; m < n; ++m) worst = std::max(worst, std::abs(p[m] - right_rl_row(nu, m, n)[i]));
            }
            CHECK(worst <= 1e-13);
        }
    }
}

TEST_CASE("riesz operator: classical limit and simple cases")
{
    const auto op = assemble_riesz_operator(2.0, 4, 0.25);
    const double expected[] = {0.0, 16.0, -32.0, 16.0, 0.0};
    for (std::size_t m = 0; m <= 4; ++m) CHECK(op.matrix(2, m) == doctest::Approx(expected[m]).epsilon(1e-12));

    const std::size_t n = 32;
    const double h = 1.0 / n;
    const auto classical = assemble_riesz_operator(2.0, n, h);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t m = 0; m <= n; ++m) {
            const double ref = m == i ? -2.0 / (h * h) : (m + 1 == i || m == i + 1) ? 1.0 / (h * h) : 0.0;
            if (ref == 0.0)
                CHECK(std::abs(classical.matrix(i, m)) <= 1e-12 / (h * h));
            else
                CHECK(rel(classical.matrix(i, m), ref) <= 1e-12);
        }

    const std::vector<double> zeros(n + 1, 0.0);
    for (double v : assemble_riesz_operator(1.5, n, h).apply(zeros)) CHECK(v == 0.0);
}

TEST_CASE("riesz operator: second-order consistency at fixed interior points")
{
    // The error is measured at x = 1/4, 1/2, 3/4; rows next to the boundary
    // see the singular x^(2-nu) behaviour and converge more slowly.
    for (double nu : {1.2, 1.5, 1.9}) {
        std::vector<double> errs;
        std::vector<double> hs;
        for (std::size_t n : {20u, 40u, 80u, 160u, 320u}) {
            const double h = 1.0 / n;
            std::vector<double> u(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                const double x = i * h;
                u[i] = x * x * (1 - x) * (1 - x);
            }
            const auto du = assemble_riesz_operator(nu, n, h).apply(u);
            double err = 0.0;
            for (std::size_t i : {n / 4, n / 2, 3 * n / 4}) err = std::max(err, std::abs(du[i] - riesz_of_quartic(i * h, nu)));
            errs.push_back(err);
            hs.push_back(h);
        }
        for (std::size_t r = 1; r < errs.size(); ++r) {
            CAPTURE(nu);
            const double rate = std::log(errs[r - 1] / errs[r]) / std::log(hs[r - 1] / hs[r]);
            CHECK(rate == doctest::Approx(2.0).epsilon(0.05 / 2.0));
        }
    }
}

TEST_CASE("weight tables are shared across threads")
{
    std::vector<std::shared_ptr<const DenseMatrix>> seen(8);
    {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < seen.size(); ++k)
            pool.emplace_back([&seen, k] { seen[k] = riesz_weight_table(1.37, 23); });
    }
    for (const auto& t : seen) {
        REQUIRE(t);
        CHECK(t.get() == seen[0].get());
    }
    const auto row = riesz_row(1.37, 5, 23).weights;
    for (std::size_t m = 0; m <= 23; ++m) CHECK((*seen[0])(5, m) == row[m]);
}

}
