#include "fracdiff/coefficients.hpp"
#include "fracdiff/config.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/solver_1d.hpp"
#include "fracdiff/solver_2d.hpp"
#include "fracdiff/stability.hpp"
#include "fracdiff/verification.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace fracdiff;

namespace {

enum Exit { kOk = 0, kConfig = 1, kSolver = 2, kGate = 3 };

struct ConfigFailure {
    Error error;
};

void report(const Error& e) { std::cerr << "error: " << e.category() << ": " << e.what() << '\n'; }

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw ConfigFailure{Error(ErrorKind::Io, "cannot open '" + path + "' for writing")};
    return out;
}

RunConfig read_config(const std::string& path)
{
    try {
        RunConfig cfg = load_config(path);
        if (cfg.dimension == 1)
            cfg.spec_1d().validate();
        else
            cfg.spec_2d().validate();
        return cfg;
    } catch (const Error& e) {
        throw ConfigFailure{e};
    }
}

void dump_history(const std::vector<Field>& history, const std::string& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigFailure{Error(ErrorKind::Io, "cannot create '" + dir + "': " + ec.message())};
    for (std::size_t k = 0; k < history.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "step_%05zu.csv", k);
        auto out = open_out((fs::path(dir) / name).string());
        write_field_csv(out, history[k]);
    }
}

int run_solve(const std::string& config_path, std::string output, const std::string& history_dir)
{
    const RunConfig cfg = read_config(config_path);
    if (output.empty() && cfg.output) output = *cfg.output;

    SolveOptions options;
    options.keep_history = !history_dir.empty();

    Field final;
    std::optional<double> error;
    const std::vector<Field>* history = nullptr;
    SolveResult1D r1;
    SolveResult2D r2;
    if (cfg.dimension == 1) {
        const auto spec = cfg.spec_1d();
        r1 = cfg.scheme == Scheme::Implicit ? solve_implicit_1d(spec, options) : solve_explicit_1d(spec, options);
        final = r1.final;
        if (spec.exact) error = max_error(final, *spec.exact, spec.time.final_time);
        if (r1.history) history = &*r1.history;
    } else {
        const auto spec = cfg.spec_2d();
        r2 = cfg.scheme == Scheme::Implicit ? solve_implicit_2d(spec, options) : solve_explicit_2d(spec, options);
        final = r2.final;
        if (spec.exact) error = max_error(final, *spec.exact, spec.time.final_time);
        if (r2.history) history = &*r2.history;
    }

    if (output.empty()) {
        write_field_csv(std::cout, final);
    } else {
        auto out = open_out(output);
        write_field_csv(out, final);
    }
    if (history) dump_history(*history, history_dir);
    if (error) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max_error %.6e\n", *error);
        (output.empty() ? std::cerr : std::cout) << buf;
    }
    return kOk;
}

std::vector<std::size_t> parse_levels(const std::string& text)
{
    std::vector<std::size_t> levels;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v <= 0) throw std::invalid_argument(item);
            levels.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw ConfigFailure{Error(ErrorKind::Schema, "--levels: bad entry '" + item + "'")};
        }
    }
    if (levels.empty()) throw ConfigFailure{Error(ErrorKind::Schema, "--levels: empty list")};
    return levels;
}

std::string g17(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Caputo-Riesz fractional diffusion solver"};
    app.require_subcommand(1);

    unsigned default_jobs = std::max(1u, std::thread::hardware_concurrency());

    std::string config_path, output, history_dir;
    auto* solve = app.add_subcommand("solve", "Solve the problem described by a JSON config");
    solve->add_option("--config", config_path, "JSON config")->required();
    solve->add_option("--output", output, "final-field CSV (default: config output or stdout)");
    solve->add_option("--dump-history", history_dir, "write one CSV per time level into this directory");

    std::string problem = "bench1d", levels_text, coupling_text = "tau-eq-dx", scheme_text = "implicit", out_path;
    double alpha = 0, beta = 2.0, gamma = 0, fixed_tau = 0, ratio = 0.9;
    unsigned jobs = default_jobs;
    auto* conv = app.add_subcommand("convergence", "Grid-refinement study on a benchmark problem");
    conv->add_option("--problem", problem)->check(CLI::IsMember({"bench1d", "bench2d"}));
    conv->add_option("--alpha", alpha)->required();
    conv->add_option("--beta", beta);
    conv->add_option("--gamma", gamma)->required();
    conv->add_option("--levels", levels_text, "comma-separated cell counts")->required();
    conv->add_option("--coupling", coupling_text)
        ->check(CLI::IsMember({"tau-eq-dx", "tau-eq-dx-pow", "fixed-tau", "stability-ratio"}));
    conv->add_option("--tau", fixed_tau, "time step for fixed-tau");
    conv->add_option("--ratio", ratio, "fraction of the explicit bound for stability-ratio");
    conv->add_option("--scheme", scheme_text)->check(CLI::IsMember({"implicit", "explicit"}));
    conv->add_option("--out", out_path, "CSV, or Markdown when the name ends in .md");
    conv->add_option("--jobs", jobs)->envname("FRACDIFF_JOBS")->check(CLI::PositiveNumber);

    int table = 0;
    std::string out_dir;
    bool gate = false;
    auto* repro = app.add_subcommand("reproduce", "Rerun a published table and compare");
    repro->add_option("--table", table)->required()->check(CLI::Range(1, 3));
    repro->add_option("--out", out_dir, "directory for Markdown and per-column CSV");
    repro->add_flag("--gate", gate, "exit 3 when any cell misses the tolerances");
    repro->add_option("--jobs", jobs)->envname("FRACDIFF_JOBS")->check(CLI::PositiveNumber);

    std::string stab_config;
    auto* stab = app.add_subcommand("stability", "Explicit-scheme stability report for a config");
    stab->add_option("--config", stab_config)->required();

    double nu = 0;
    std::size_t n = 0;
    std::string what = "g";
    auto* dump = app.add_subcommand("dump-coefficients", "CSV of a coefficient table");
    dump->add_option("--nu", nu, "space order (time order for caputo)")->required();
    dump->add_option("--n", n, "cells (steps for caputo)")->required();
    dump->add_option("--what", what)->check(CLI::IsMember({"g", "p", "q", "caputo"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return kConfig;
    }

    try {
        if (*solve) return run_solve(config_path, output, history_dir);

        if (*conv) {
            Family family;
            family.problem = problem == "bench2d" ? BenchmarkId::TwoD : BenchmarkId::OneD;
            family.alpha = alpha;
            family.beta = beta;
            family.gamma = gamma;
            RefinementOptions opts;
            opts.scheme = parse_scheme(scheme_text);
            opts.coupling = parse_coupling(coupling_text);
            opts.fixed_tau = fixed_tau;
            opts.stability_ratio = ratio;
            opts.jobs = jobs;
            const auto levels = parse_levels(levels_text);
            ConvergenceReport rep;
            try {
                rep = run_refinement(family, levels, opts);
            } catch (const Error& e) {
                throw ConfigFailure{e};
            }
            const bool md = ends_with(out_path, ".md");
            if (out_path.empty()) {
                write_csv(std::cout, rep);
            } else {
                try {
                    emit(rep, md ? ReportFormat::Markdown : ReportFormat::Csv, out_path);
                } catch (const Error& e) {
                    throw ConfigFailure{e};
                }
            }
            int code = kOk;
            for (const auto& row : rep.rows)
                if (row.failure) {
                    std::cerr << "error: solver: N=" << row.cells << ": " << *row.failure << '\n';
                    code = kSolver;
                }
            return code;
        }

        if (*repro) {
            const auto reports = reproduce_table(table, jobs);
            std::ostringstream md;
            const std::string title = "Table " + std::to_string(table) + ": computed (published)";
            if (table == 2) {
                write_markdown(md, reports, title);
            } else {
                // Two blocks of three columns, as published.
                write_markdown(md, std::span(reports).first(3), title);
                write_markdown(md, std::span(reports).subspan(3));
            }
            std::cout << md.str();
            if (!out_dir.empty()) {
                std::error_code ec;
                fs::create_directories(out_dir, ec);
                if (ec) throw ConfigFailure{Error(ErrorKind::Io, "cannot create '" + out_dir + "'")};
                auto md_file = open_out((fs::path(out_dir) / ("table" + std::to_string(table) + ".md")).string());
                md_file << md.str();
                for (std::size_t c = 0; c < reports.size(); ++c) {
                    auto csv = open_out(
                        (fs::path(out_dir) / ("table" + std::to_string(table) + "_col" + std::to_string(c + 1) + ".csv"))
                            .string());
                    csv << "# " << reports[c].label << '\n';
                    write_csv(csv, reports[c]);
                }
            }
            std::size_t failures = 0;
            for (const auto& rep : reports)
                for (const auto& f : gate_failures(rep)) {
                    std::cerr << (gate ? "error: gate: " : "warning: ") << f << '\n';
                    ++failures;
                }
            if (failures == 0) std::cerr << "all cells within tolerance\n";
            return gate && failures > 0 ? kGate : kOk;
        }

        if (*stab) {
            const RunConfig cfg = read_config(stab_config);
            try {
                const auto r = cfg.dimension == 1 ? explicit_bound_1d(cfg.spec_1d()) : explicit_bound_2d(cfg.spec_2d());
                write_report(std::cout, r);
            } catch (const Error& e) {
                throw ConfigFailure{e};
            }
            return kOk;
        }

        if (*dump) {
            try {
                if (what == "caputo") {
                    const auto w = caputo_weights(nu, n);
                    std::cout << "s,l\n";
                    for (std::size_t s = 0; s < w.size(); ++s) std::cout << s << ',' << g17(w[s]) << '\n';
                    return kOk;
                }
                std::cout << "i";
                for (std::size_t m = 0; m <= n; ++m) std::cout << ",m" << m;
                std::cout << '\n';
                for (std::size_t i = 1; i < n; ++i) {
                    const auto row = what == "p" ? left_rl_row(nu, i, n)
                                   : what == "q" ? right_rl_row(nu, i, n)
                                                 : riesz_row(nu, i, n).weights;
                    std::cout << i;
                    for (double v : row) std::cout << ',' << g17(v);
                    std::cout << '\n';
                }
            } catch (const Error& e) {
                throw ConfigFailure{e};
            }
            return kOk;
        }
    } catch (const ConfigFailure& f) {
        report(f.error);
        return kConfig;
    } catch (const Error& e) {
        report(e);
        return kSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return kSolver;
    }
    return kOk;
}
