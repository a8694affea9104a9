#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace fracdiff::detail {

struct BaselineColumn {
    int table;
    double alpha;
    double beta;  // unused for 1D tables
    double gamma;
    std::array<std::size_t, 4> cells;
    std::array<double, 4> errors;
    std::array<double, 3> rates;  // between consecutive levels
};

std::span<const BaselineColumn> baseline_columns();

}  // namespace fracdiff::detail
