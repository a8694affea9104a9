#include "fracdiff/verification.hpp"

#include "baselines.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/problem.hpp"
#include "fracdiff/solver_1d.hpp"
#include "fracdiff/solver_2d.hpp"
#include "fracdiff/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace fracdiff {

namespace {

constexpr double kFinalTime = 0.5;

std::string num(const char* format, double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string sig5(double v) { return num("%.5g", v); }
std::string err5(double v) { return num("%.4e", v); }

std::string family_label(const Family& f)
{
    std::ostringstream os;
    os << "alpha=" << sig5(f.alpha);
    if (f.problem == BenchmarkId::TwoD) os << " beta=" << sig5(f.beta);
    os << " gamma=" << sig5(f.gamma);
    return os.str();
}

std::size_t round_steps(double ratio)
{
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(ratio)));
}

std::size_t stability_steps(const Family& family, std::size_t cells, double ratio)
{
    // The bound term scales like tau^gamma, so one trial report with N_t = 1 fixes tau.
    StabilityReport r;
    if (family.problem == BenchmarkId::OneD)
        r = explicit_bound_1d(benchmark_1d(family.alpha, family.gamma, cells, 1));
    else
        r = explicit_bound_2d(benchmark_2d(family.alpha, family.beta, family.gamma, cells, 1));
    if (r.unconditional()) return cells;
    const double tau = kFinalTime * std::pow(ratio * r.bound / r.actual, 1.0 / family.gamma);
    if (tau >= kFinalTime) return 1;
    return static_cast<std::size_t>(std::ceil(kFinalTime / tau - 1e-9));
}

double solve_level(const Family& family, std::size_t cells, std::size_t steps, Scheme scheme)
{
    SolveOptions quiet;
    quiet.warn = [](std::string_view) {};
    if (family.problem == BenchmarkId::OneD) {
        const auto spec = benchmark_1d(family.alpha, family.gamma, cells, steps);
        const auto result = scheme == Scheme::Implicit ? solve_implicit_1d(spec, quiet) : solve_explicit_1d(spec, quiet);
        return max_error(result.final, *spec.exact, spec.time.final_time);
    }
    const auto spec = benchmark_2d(family.alpha, family.beta, family.gamma, cells, steps);
    const auto result = scheme == Scheme::Implicit ? solve_implicit_2d(spec, quiet) : solve_explicit_2d(spec, quiet);
    return max_error(result.final, *spec.exact, spec.time.final_time);
}

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
}

void fill_rates(ConvergenceReport& report)
{
    for (std::size_t r = 1; r < report.rows.size(); ++r) {
        const auto& prev = report.rows[r - 1];
        auto& row = report.rows[r];
        if (prev.failure || row.failure) continue;
        row.rate = observed_rate(prev.max_error, row.max_error, prev.dx, row.dx);
    }
}

}  // namespace

std::optional<double> ReportRow::rel_diff() const
{
    if (!ref_error || failure) return std::nullopt;
    return (max_error - *ref_error) / *ref_error;
}

double observed_rate(double error_prev, double error, double dx_prev, double dx)
{
    return std::log(error_prev / error) / std::log(dx_prev / dx);
}

std::size_t coupled_steps(const Family& family, std::size_t cells, const RefinementOptions& options)
{
    const double dx = 1.0 / static_cast<double>(cells);
    switch (options.coupling) {
    case Coupling::TauEqDx: return round_steps(kFinalTime / dx);
    case Coupling::TauEqDxPow: return round_steps(kFinalTime / std::pow(dx, 2.0 / (2.0 - family.gamma)));
    case Coupling::FixedTau:
        if (!(options.fixed_tau > 0.0)) throw Error(ErrorKind::Domain, "fixed-tau coupling needs tau > 0");
        return round_steps(kFinalTime / options.fixed_tau);
    case Coupling::StabilityRatio:
        if (!(options.stability_ratio > 0.0)) throw Error(ErrorKind::Domain, "stability ratio must be positive");
        return stability_steps(family, cells, options.stability_ratio);
    }
    return 1;
}

ConvergenceReport run_refinement(const Family& family, std::span<const std::size_t> levels,
                                 const RefinementOptions& options)
{
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 4) throw Error(ErrorKind::Domain, "refinement levels must be at least 4");
        if (i > 0 && levels[i] <= levels[i - 1])
            throw Error(ErrorKind::Domain, "refinement levels must be strictly increasing");
    }

    ConvergenceReport report;
    report.label = family_label(family);
    report.family = family;
    report.scheme = options.scheme;
    report.coupling = options.coupling;
    report.rows.resize(levels.size());

    parallel_for(levels.size(), options.jobs, [&](std::size_t i) {
        ReportRow& row = report.rows[i];
        row.cells = levels[i];
        row.dx = 1.0 / static_cast<double>(levels[i]);
        if (family.problem == BenchmarkId::TwoD) row.dy = row.dx;
        try {
            row.steps = coupled_steps(family, levels[i], options);
            row.tau = kFinalTime / static_cast<double>(row.steps);
            row.max_error = solve_level(family, levels[i], row.steps, options.scheme);
        } catch (const Error& e) {
            row.max_error = std::numeric_limits<double>::quiet_NaN();
            row.failure = std::string(e.category()) + ": " + e.what();
        }
    });
    fill_rates(report);
    return report;
}

std::vector<ConvergenceReport> reproduce_table(int id, unsigned jobs)
{
    if (id < 1 || id > 3) throw Error(ErrorKind::Domain, "table id must be 1, 2 or 3, got " + std::to_string(id));

    std::vector<const detail::BaselineColumn*> columns;
    for (const auto& col : detail::baseline_columns())
        if (col.table == id) columns.push_back(&col);

    // Flatten every (column, level) pair so small and large cells share the worker pool.
    struct Cell {
        std::size_t column, level;
    };
    std::vector<Cell> cells;
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t l = 0; l < 4; ++l) cells.push_back({c, l});
    // Largest grids first keeps the tail short.
    std::stable_sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
        return columns[a.column]->cells[a.level] > columns[b.column]->cells[b.level];
    });

    std::vector<ConvergenceReport> reports(columns.size());
    std::vector<RefinementOptions> options(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& col = *columns[c];
        auto& rep = reports[c];
        rep.family = Family{id == 3 ? BenchmarkId::TwoD : BenchmarkId::OneD, col.alpha, id == 3 ? col.beta : 2.0,
                            col.gamma};
        rep.label = family_label(rep.family);
        rep.scheme = Scheme::Implicit;
        rep.coupling = id == 2 ? Coupling::TauEqDxPow : Coupling::TauEqDx;
        options[c].coupling = rep.coupling;
        rep.rows.resize(4);
        for (std::size_t l = 0; l < 4; ++l) {
            rep.rows[l].ref_error = col.errors[l];
            if (l > 0) rep.rows[l].ref_rate = col.rates[l - 1];
        }
    }

    parallel_for(cells.size(), jobs, [&](std::size_t k) {
        const auto [c, l] = cells[k];
        const std::size_t n = columns[c]->cells[l];
        ReportRow& row = reports[c].rows[l];
        row.cells = n;
        row.dx = 1.0 / static_cast<double>(n);
        if (id == 3) row.dy = row.dx;
        try {
            row.steps = coupled_steps(reports[c].family, n, options[c]);
            row.tau = kFinalTime / static_cast<double>(row.steps);
            row.max_error = solve_level(reports[c].family, n, row.steps, Scheme::Implicit);
        } catch (const Error& e) {
            row.max_error = std::numeric_limits<double>::quiet_NaN();
            row.failure = std::string(e.category()) + ": " + e.what();
        }
    });
    for (auto& rep : reports) fill_rates(rep);
    return reports;
}

std::vector<std::string> gate_failures(const ConvergenceReport& report)
{
    std::vector<std::string> out;
    for (const auto& row : report.rows) {
        const std::string where = report.label + " N=" + std::to_string(row.cells);
        if (row.failure) {
            out.push_back(where + ": " + *row.failure);
            continue;
        }
        if (auto rd = row.rel_diff(); rd && std::abs(*rd) > report.error_tolerance)
            out.push_back(where + ": error " + err5(row.max_error) + " vs " + err5(*row.ref_error) + " (" +
                          sig5(100.0 * *rd) + "%)");
        if (row.ref_rate && (!row.rate || std::abs(*row.rate - *row.ref_rate) > report.rate_tolerance))
            out.push_back(where + ": rate " + (row.rate ? sig5(*row.rate) : std::string("n/a")) + " vs " +
                          sig5(*row.ref_rate));
    }
    return out;
}

std::string to_string(Scheme scheme) { return scheme == Scheme::Implicit ? "implicit" : "explicit"; }

std::string to_string(Coupling coupling)
{
    switch (coupling) {
    case Coupling::TauEqDx: return "tau-eq-dx";
    case Coupling::TauEqDxPow: return "tau-eq-dx-pow";
    case Coupling::FixedTau: return "fixed-tau";
    case Coupling::StabilityRatio: return "stability-ratio";
    }
    return "?";
}

Scheme parse_scheme(const std::string& text)
{
    if (text == "implicit") return Scheme::Implicit;
    if (text == "explicit") return Scheme::Explicit;
    throw Error(ErrorKind::Schema, "scheme must be implicit or explicit, got '" + text + "'");
}

Coupling parse_coupling(const std::string& text)
{
    for (auto c : {Coupling::TauEqDx, Coupling::TauEqDxPow, Coupling::FixedTau, Coupling::StabilityRatio})
        if (to_string(c) == text) return c;
    throw Error(ErrorKind::Schema, "unknown coupling '" + text + "'");
}

void write_csv(std::ostream& out, const ConvergenceReport& report)
{
    out << "N,dx,tau,max_error,rate,ref_error,rel_diff\n";
    for (const auto& row : report.rows) {
        out << row.cells << ',' << sig5(row.dx) << ',' << sig5(row.tau) << ','
            << (row.failure ? std::string() : err5(row.max_error)) << ',' << (row.rate ? sig5(*row.rate) : "") << ','
            << (row.ref_error ? err5(*row.ref_error) : "") << ','
            << (row.rel_diff() ? sig5(*row.rel_diff()) : "") << '\n';
    }
}

void write_markdown(std::ostream& out, std::span<const ConvergenceReport> reports, const std::string& title)
{
    if (!title.empty()) out << "### " << title << "\n\n";
    out << "| N |";
    for (const auto& r : reports) out << ' ' << r.label << " | Rate |";
    out << "\n|---|";
    for (std::size_t i = 0; i < reports.size(); ++i) out << "---|---|";
    out << '\n';

    std::size_t rows = 0;
    for (const auto& r : reports) rows = std::max(rows, r.rows.size());
    for (std::size_t k = 0; k < rows; ++k) {
        std::size_t n = 0;
        for (const auto& r : reports)
            if (k < r.rows.size()) n = r.rows[k].cells;
        out << "| 1/" << n << " |";
        for (const auto& r : reports) {
            if (k >= r.rows.size()) {
                out << " | |";
                continue;
            }
            const auto& row = r.rows[k];
            std::string cell = row.failure ? "failed" : err5(row.max_error);
            if (row.ref_error) cell += " (" + err5(*row.ref_error) + ")";
            std::string rate = row.rate ? sig5(*row.rate) : "";
            if (row.ref_rate) rate += " (" + sig5(*row.ref_rate) + ")";
            out << ' ' << cell << " | " << rate << " |";
        }
        out << '\n';
    }
    out << '\n';
}

void emit(const ConvergenceReport& report, ReportFormat format, const std::string& path)
{
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    if (format == ReportFormat::Csv)
        write_csv(file, report);
    else
        write_markdown(file, std::span(&report, 1));
    if (!file) throw Error(ErrorKind::Io, "failed writing '" + path + "'");
}

}  // namespace fracdiff
