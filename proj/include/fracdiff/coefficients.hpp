#pragma once

#include "fracdiff/linalg.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace fracdiff {

/// Gamma function for z > 0 (Lanczos, g = 607/128, 15 terms; reflection below 1/2).
/// Relative error stays below 1e-14 on (0, 20].
double gamma_fn(double z);

/// L1 weights of the Caputo derivative: l_s = (s+1)^{1-gamma} - s^{1-gamma}.
struct CaputoWeights {
    double gamma = 1.0;
    std::vector<double> weights;  // l_0 .. l_K

    double operator[](std::size_t s) const { return weights[s]; }
    std::size_t size() const noexcept { return weights.size(); }
};

/// Weights l_0..l_steps. gamma must lie in (0, 1].
CaputoWeights caputo_weights(double gamma, std::size_t steps);

/// 1 / (2 cos(nu*pi/2)). Orders with |cos(nu*pi/2)| <= 1e-8 are rejected.
double kappa(double nu);

/// Accepts nu in (0, 1) U (1, 2]; throws InvalidOrder or SingularOrder otherwise.
void require_space_order(double nu);

/// Left Riemann-Liouville weights p_{i,m}, m = 0..n, for interior node i of a
/// grid with n cells. Zero for m > i+1.
std::vector<double> left_rl_row(double nu, std::size_t i, std::size_t n);

/// Right Riemann-Liouville weights q_{i,m}, m = 0..n. Zero for m < i-1.
std::vector<double> right_rl_row(double nu, std::size_t i, std::size_t n);

struct RieszRowWeights {
    double nu = 2.0;
    std::size_t row_index = 0;
    std::vector<double> weights;  // g_{i,m}, m = 0..n
};

/// Combined weights g_{i,m} = p_{i,m} + q_{i,m}.
RieszRowWeights riesz_row(double nu, std::size_t i, std::size_t n);

/// Unscaled g table for all rows: (n+1) x (n+1), boundary rows zero.
/// Tables are built once per (nu, n) and shared; safe to call concurrently.
std::shared_ptr<const DenseMatrix> riesz_weight_table(double nu, std::size_t n);

/// Discrete Riesz derivative on a uniform grid of n cells with spacing h.
struct RieszOperator {
    double nu = 2.0;
    double kappa = -0.5;
    double h = 1.0;
    DenseMatrix matrix;  // interior rows -kappa g_{i,.} / (Gamma(4-nu) h^nu)

    std::vector<double> apply(std::span<const double> u) const { return matvec(matrix, u); }
};

RieszOperator assemble_riesz_operator(double nu, std::size_t n, double h);

}  // namespace fracdiff
