#include "fracdiff/linalg.hpp"

#include "fracdiff/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace fracdiff {

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

bool all_finite(std::span<const double> v)
{
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double DenseMatrix::norm_inf() const noexcept
{
    double best = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double sum = 0.0;
        for (double x : row(r)) sum += std::abs(x);
        best = std::max(best, sum);
    }
    return best;
}

void DenseMatrix::reset(std::size_t rows, std::size_t cols)
{
    rows_ = rows;
    cols_ = cols;
    data_.assign(rows * cols, 0.0);
}

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> v)
{
    if (a.cols() != v.size())
        throw Error(ErrorKind::Dimension, "matvec: matrix has " + std::to_string(a.cols()) +
                                              " columns but vector has " + std::to_string(v.size()) +
                                              " entries");
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto row = a.row(r);
        double sum = 0.0;
        for (std::size_t c = 0; c < row.size(); ++c) sum += row[c] * v[c];
        out[r] = sum;
    }
    return out;
}

double norm_inf(std::span<const double> v) noexcept
{
    double best = 0.0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
}

std::vector<double> lu_solve(const DenseMatrix& a, std::span<const double> b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n)
        throw Error(ErrorKind::Dimension, "lu_solve: matrix is not square");
    if (b.size() != n)
        throw Error(ErrorKind::Dimension, "lu_solve: right-hand side has " + std::to_string(b.size()) +
                                              " entries, expected " + std::to_string(n));
    if (!all_finite(a.data()) || !all_finite(b))
        throw Error(ErrorKind::NonFinite, "lu_solve: non-finite entry in system");
    if (n == 0) return {};

    const auto idx = static_cast<Eigen::Index>(n);
    Eigen::Map<const RowMajor> am(a.data().data(), idx, idx);
    Eigen::PartialPivLU<RowMajor> lu(am);

    const double threshold = 1e-14 * a.norm_inf();
    const auto diag = lu.matrixLU().diagonal();
    for (Eigen::Index i = 0; i < idx; ++i) {
        if (!(std::abs(diag(i)) > threshold))
            throw Error(ErrorKind::SingularMatrix,
                        "lu_solve: pivot " + std::to_string(i) + " below singularity threshold");
    }

    Eigen::Map<const Eigen::VectorXd> bm(b.data(), idx);
    std::vector<double> x(n);
    Eigen::Map<Eigen::VectorXd>(x.data(), idx) = lu.solve(bm);
    return x;
}

}  // namespace fracdiff
