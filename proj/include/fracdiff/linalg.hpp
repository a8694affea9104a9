#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracdiff {

/// Row-major dense matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    /// Maximum absolute row sum.
    double norm_inf() const noexcept;

    /// Resizes and zero-fills, reusing the allocation when possible.
    void reset(std::size_t rows, std::size_t cols);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> v);

double norm_inf(std::span<const double> v) noexcept;

/// Solves A x = b by LU factorization with partial pivoting.
///
/// Throws ErrorKind::SingularMatrix when a pivot falls below 1e-14 * ||A||_inf,
/// ErrorKind::Dimension on shape mismatch and ErrorKind::NonFinite when A or b
/// holds NaN/Inf.
std::vector<double> lu_solve(const DenseMatrix& a, std::span<const double> b);

}  // namespace fracdiff
