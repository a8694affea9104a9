#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fracdiff {

enum class Scheme { Implicit, Explicit };

/// How the time step follows the grid spacing.
///   TauEqDx        tau = dx
///   TauEqDxPow     tau = dx^(2/(2-gamma))
///   FixedTau       tau = fixed_tau
///   StabilityRatio tau^gamma-term = ratio * explicit bound (rounded so the bound still holds)
/// Step counts are rounded to the nearest integer (up for StabilityRatio) and tau
/// is recomputed as T / N_t.
enum class Coupling { TauEqDx, TauEqDxPow, FixedTau, StabilityRatio };

enum class BenchmarkId { OneD, TwoD };

struct Family {
    BenchmarkId problem = BenchmarkId::OneD;
    double alpha = 2.0;
    double beta = 2.0;  // 2D only
    double gamma = 1.0;
};

struct RefinementOptions {
    Scheme scheme = Scheme::Implicit;
    Coupling coupling = Coupling::TauEqDx;
    double fixed_tau = 0.0;
    double stability_ratio = 0.9;
    unsigned jobs = 1;
};

struct ReportRow {
    std::size_t cells = 0;
    double dx = 0.0;
    std::optional<double> dy;
    double tau = 0.0;
    std::size_t steps = 0;
    double max_error = 0.0;  // NaN when the level failed
    std::optional<double> rate;
    std::optional<double> ref_error;
    std::optional<double> ref_rate;
    std::optional<std::string> failure;

    std::optional<double> rel_diff() const;
};

struct ConvergenceReport {
    std::string label;
    Family family;
    Scheme scheme = Scheme::Implicit;
    Coupling coupling = Coupling::TauEqDx;
    double error_tolerance = 0.02;
    double rate_tolerance = 0.05;
    std::vector<ReportRow> rows;
};

/// log(e_prev / e) / log(dx_prev / dx).
double observed_rate(double error_prev, double error, double dx_prev, double dx);

/// Number of time steps on (0, T] for the given coupling at `cells` cells.
std::size_t coupled_steps(const Family& family, std::size_t cells, const RefinementOptions& options);

/// Levels must be strictly increasing and at least 4. Failed levels are
/// recorded in ReportRow::failure.
ConvergenceReport run_refinement(const Family& family, std::span<const std::size_t> levels,
                                 const RefinementOptions& options);

/// Runs every column of table 1, 2 or 3 and attaches the published values.
std::vector<ConvergenceReport> reproduce_table(int id, unsigned jobs = 1);

/// Cells whose error or rate is off by more than the report tolerances.
std::vector<std::string> gate_failures(const ConvergenceReport& report);

std::string to_string(Scheme scheme);
std::string to_string(Coupling coupling);
Scheme parse_scheme(const std::string& text);
Coupling parse_coupling(const std::string& text);

/// `N,dx,tau,max_error,rate,ref_error,rel_diff`, 5 significant digits.
void write_csv(std::ostream& out, const ConvergenceReport& report);

/// One Markdown table: error and rate columns per report, one row per level.
void write_markdown(std::ostream& out, std::span<const ConvergenceReport> reports, const std::string& title = {});

enum class ReportFormat { Csv, Markdown };

/// Writes to `path`; throws ErrorKind::Io when the file cannot be written.
void emit(const ConvergenceReport& report, ReportFormat format, const std::string& path);

}  // namespace fracdiff
