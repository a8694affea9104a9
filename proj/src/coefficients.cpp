#include "fracdiff/coefficients.hpp"

#include "fracdiff/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

namespace fracdiff {

namespace {

// Lanczos coefficients for g = 607/128, fitted at z = 1..15.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double lanczos_gamma(double z)
{
    double sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (z + static_cast<double>(k) - 1.0);
    const double base = z + kLanczosG - 0.5;
    // Split the power so base^(z-0.5) does not overflow before exp(-base) shrinks it.
    const double half = std::pow(base, 0.5 * (z - 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-base)) * sum;
}

// a_{j,m}: fractional-integral weights anchored at the left end.
// At j = 0 the integral spans no cells and vanishes unless nu = 2,
// where it degenerates to point evaluation.
double left_weight(double nu, long j, long m)
{
    if (m == j) return (j == 0 && nu < 2.0) ? 0.0 : 1.0;
    if (m < 0 || m > j) return 0.0;
    const double e = 3.0 - nu;
    const auto jd = static_cast<double>(j);
    if (m == 0) return std::pow(jd - 1.0, e) - std::pow(jd, 2.0 - nu) * (jd - 3.0 + nu);
    const auto d = static_cast<double>(j - m);
    return std::pow(d + 1.0, e) - 2.0 * std::pow(d, e) + std::pow(d - 1.0, e);
}

// b_{j,m}: mirror image of a anchored at the right end (n cells).
double right_weight(double nu, long j, long m, long n)
{
    if (m == j) return (j == n && nu < 2.0) ? 0.0 : 1.0;
    if (m < j || m > n) return 0.0;
    const double e = 3.0 - nu;
    if (m == n) {
        const auto r = static_cast<double>(n - j);
        return (3.0 - nu - r) * std::pow(r, 2.0 - nu) + std::pow(r - 1.0, e);
    }
    const auto d = static_cast<double>(m - j);
    return std::pow(d + 1.0, e) - 2.0 * std::pow(d, e) + std::pow(d - 1.0, e);
}

void require_interior(std::size_t i, std::size_t n)
{
    if (n < 3)
        throw Error(ErrorKind::Index, "grid needs at least 3 cells, got " + std::to_string(n));
    if (i < 1 || i + 1 > n)
        throw Error(ErrorKind::Index,
                    "row " + std::to_string(i) + " is not interior for " + std::to_string(n) + " cells");
}

}  // namespace

double gamma_fn(double z)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw Error(ErrorKind::Domain, "gamma_fn: argument must be positive, got " + std::to_string(z));
    if (z < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * z) * lanczos_gamma(1.0 - z));
    }
    return lanczos_gamma(z);
}

CaputoWeights caputo_weights(double gamma, std::size_t steps)
{
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw Error(ErrorKind::Domain, "caputo_weights: gamma must lie in (0, 1], got " + std::to_string(gamma));
    CaputoWeights out;
    out.gamma = gamma;
    out.weights.resize(steps + 1);
    out.weights[0] = 1.0;
    const double p = 1.0 - gamma;
    for (std::size_t s = 1; s <= steps; ++s) {
        const auto sd = static_cast<double>(s);
        // (s+1)^p - s^p without cancellation
        out.weights[s] = std::pow(sd, p) * std::expm1(p * std::log1p(1.0 / sd));
    }
    return out;
}

double kappa(double nu)
{
    const double c = std::cos(nu * std::numbers::pi / 2.0);
    if (!(std::abs(c) > 1e-8))
        throw Error(ErrorKind::SingularOrder, "order " + std::to_string(nu) + " makes cos(nu*pi/2) vanish");
    return 1.0 / (2.0 * c);
}

void require_space_order(double nu)
{
    if (!(nu > 0.0 && nu <= 2.0))
        throw Error(ErrorKind::InvalidOrder, "space order must lie in (0,1) U (1,2], got " + std::to_string(nu));
    (void)kappa(nu);
}

std::vector<double> left_rl_row(double nu, std::size_t i, std::size_t n)
{
    require_space_order(nu);
    require_interior(i, n);
    const auto il = static_cast<long>(i);
    std::vector<double> p(n + 1, 0.0);
    for (long m = 0; m + 1 <= il; ++m)
        p[m] = left_weight(nu, il - 1, m) - 2.0 * left_weight(nu, il, m) + left_weight(nu, il + 1, m);
    p[i] = -2.0 * left_weight(nu, il, il) + left_weight(nu, il + 1, il);
    p[i + 1] = left_weight(nu, il + 1, il + 1);
    return p;
}

std::vector<double> right_rl_row(double nu, std::size_t i, std::size_t n)
{
    require_space_order(nu);
    require_interior(i, n);
    const auto il = static_cast<long>(i);
    const auto nl = static_cast<long>(n);
    std::vector<double> q(n + 1, 0.0);
    q[i - 1] = right_weight(nu, il - 1, il - 1, nl);
    q[i] = -2.0 * right_weight(nu, il, il, nl) + right_weight(nu, il - 1, il, nl);
    for (long m = il + 1; m <= nl; ++m)
        q[m] = right_weight(nu, il - 1, m, nl) - 2.0 * right_weight(nu, il, m, nl) + right_weight(nu, il + 1, m, nl);
    return q;
}

RieszRowWeights riesz_row(double nu, std::size_t i, std::size_t n)
{
    auto g = left_rl_row(nu, i, n);
    const auto q = right_rl_row(nu, i, n);
    for (std::size_t m = 0; m <= n; ++m) g[m] += q[m];
    return {nu, i, std::move(g)};
}

std::shared_ptr<const DenseMatrix> riesz_weight_table(double nu, std::size_t n)
{
    static std::mutex mutex;
    static std::map<std::pair<std::uint64_t, std::size_t>, std::shared_ptr<const DenseMatrix>> cache;

    const auto key = std::make_pair(std::bit_cast<std::uint64_t>(nu), n);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    require_space_order(nu);
    require_interior(1, n);
    auto table = std::make_shared<DenseMatrix>(n + 1, n + 1);
    for (std::size_t i = 1; i < n; ++i) {
        const auto row = riesz_row(nu, i, n);
        std::copy(row.weights.begin(), row.weights.end(), table->row(i).begin());
    }

    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(table)).first->second;
}

RieszOperator assemble_riesz_operator(double nu, std::size_t n, double h)
{
    if (!(h > 0.0)) throw Error(ErrorKind::Domain, "grid spacing must be positive");
    const double k = kappa(nu);
    const auto& g = *riesz_weight_table(nu, n);
    const double scale = -k / (gamma_fn(4.0 - nu) * std::pow(h, nu));

    RieszOperator op{nu, k, h, DenseMatrix(n + 1, n + 1)};
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t m = 0; m <= n; ++m) op.matrix(i, m) = scale * g(i, m);
    return op;
}

}  // namespace fracdiff
