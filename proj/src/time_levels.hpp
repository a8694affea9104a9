#pragma once

#include "fracdiff/coefficients.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/problem.hpp"
#include "fracdiff/solve_options.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fracdiff::detail {

/// All time levels of a run plus the L1 memory term
///   sum_{s=0}^{k-1} (l_s - l_{s+1}) u^{k-s} + l_k u^0.
class TimeLevels {
public:
    TimeLevels(double gamma, std::size_t steps, std::vector<double> initial)
        : weights_(caputo_weights(gamma, steps))
    {
        diffs_.resize(steps);
        for (std::size_t s = 0; s < steps; ++s) diffs_[s] = weights_[s] - weights_[s + 1];
        levels_.reserve(steps + 1);
        levels_.push_back(std::move(initial));
    }

    std::size_t current() const noexcept { return levels_.size() - 1; }
    const std::vector<double>& level(std::size_t k) const { return levels_[k]; }
    const std::vector<double>& latest() const { return levels_.back(); }

    /// Memory term at node `i` when advancing from level k = current().
    double memory(std::size_t i) const noexcept
    {
        const std::size_t k = current();
        double acc = weights_[k] * levels_[0][i];
        for (std::size_t s = 0; s < k; ++s) acc += diffs_[s] * levels_[k - s][i];
        return acc;
    }

    /// Appends a level after checking that it is finite.
    void push(std::vector<double> next)
    {
        for (double v : next)
            if (!std::isfinite(v))
                throw StepError(ErrorKind::NonFinite, "non-finite value at step " + std::to_string(current() + 1),
                                current() + 1);
        levels_.push_back(std::move(next));
    }

    std::vector<double> max_abs_trace() const
    {
        std::vector<double> out;
        out.reserve(levels_.size());
        for (const auto& lv : levels_) {
            double m = 0.0;
            for (double v : lv) m = std::max(m, std::abs(v));
            out.push_back(m);
        }
        return out;
    }

    std::vector<std::vector<double>> take() && { return std::move(levels_); }

private:
    CaputoWeights weights_;
    std::vector<double> diffs_;
    std::vector<std::vector<double>> levels_;
};

inline void emit_warning(const SolveOptions& options, std::string_view message)
{
    if (options.warn)
        options.warn(message);
    else
        std::cerr << "warning: " << message << '\n';
}

}  // namespace fracdiff::detail
