#include "fracdiff/config.hpp"

#include "fracdiff/coefficients.hpp"
#include "fracdiff/error.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace fracdiff {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& key, const std::string& what)
{
    throw Error(ErrorKind::Schema, key + ": " + what);
}

void require_object(const json& j, const std::string& key)
{
    if (!j.is_object()) schema_error(key, "expected an object");
}

/// Rejects unknown members and reports missing required ones.
void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {})
{
    auto prefix = [&](const std::string& k) { return where.empty() ? k : where + "." + k; };
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* r : required) known = known || k == r;
        for (const char* o : optional) known = known || k == o;
        if (!known) schema_error(prefix(k), "unknown key");
    }
    for (const char* r : required)
        if (!j.contains(r)) schema_error(prefix(r), "missing");
}

double number(const json& j, const std::string& key)
{
    if (!j.is_number()) schema_error(key, "expected a number");
    return j.get<double>();
}

std::size_t count(const json& j, const std::string& key, std::size_t minimum)
{
    if (!j.is_number_integer() || j.get<long long>() < static_cast<long long>(minimum))
        schema_error(key, "expected an integer >= " + std::to_string(minimum));
    return j.get<std::size_t>();
}

Grid1D interval(const json& j, const std::string& key)
{
    if (!j.is_array() || j.size() != 2) schema_error(key, "expected [left, right]");
    Grid1D g;
    g.left = number(j[0], key + "[0]");
    g.right = number(j[1], key + "[1]");
    if (!(g.left < g.right)) schema_error(key, "left end must be below right end");
    return g;
}

Expr expression(const json& j, const std::string& key)
{
    if (!j.is_string()) schema_error(key, "expected an expression string");
    try {
        return parse_expression(j.get<std::string>());
    } catch (const SyntaxError& e) {
        throw SyntaxError(e.kind(), key + ": " + e.detail(), e.offset());
    }
}

double space_order(const json& j, const std::string& key)
{
    const double v = number(j, key);
    try {
        require_space_order(v);
    } catch (const Error& e) {
        schema_error(key, e.what());
    }
    return v;
}

}  // namespace

ProblemSpec1D RunConfig::spec_1d() const
{
    if (dimension != 1) throw Error(ErrorKind::Schema, "dimension: config is not one-dimensional");
    ProblemSpec1D s;
    s.grid = x;
    s.time = TimeGrid{final_time, steps};
    s.gamma = gamma;
    s.alpha = alpha;
    s.c = [e = c](double xv, double t) { return e.eval(xv, 0.0, t); };
    s.f = [e = source](double xv, double t) { return e.eval(xv, 0.0, t); };
    s.u0 = [e = initial](double xv) { return e.eval(xv, 0.0, 0.0); };
    s.boundary_left = [e = boundary, xl = x.left](double t) { return e.eval(xl, 0.0, t); };
    s.boundary_right = [e = boundary, xr = x.right](double t) { return e.eval(xr, 0.0, t); };
    if (exact) s.exact = [e = *exact](double xv, double t) { return e.eval(xv, 0.0, t); };
    return s;
}

ProblemSpec2D RunConfig::spec_2d() const
{
    if (dimension != 2) throw Error(ErrorKind::Schema, "dimension: config is not two-dimensional");
    ProblemSpec2D s;
    s.grid = Grid2D{x, *y};
    s.time = TimeGrid{final_time, steps};
    s.gamma = gamma;
    s.alpha = alpha;
    s.beta = *beta;
    s.c = [e = c](double xv, double yv, double t) { return e.eval(xv, yv, t); };
    s.d = [e = *d](double xv, double yv, double t) { return e.eval(xv, yv, t); };
    s.f = [e = source](double xv, double yv, double t) { return e.eval(xv, yv, t); };
    s.u0 = [e = initial](double xv, double yv) { return e.eval(xv, yv, 0.0); };
    s.boundary = [e = boundary](double xv, double yv, double t) { return e.eval(xv, yv, t); };
    if (exact) s.exact = [e = *exact](double xv, double yv, double t) { return e.eval(xv, yv, t); };
    return s;
}

RunConfig parse_config(std::string_view json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Schema, std::string("invalid JSON: ") + e.what());
    }
    require_object(root, "(root)");
    check_keys(root, "",
               {"dimension", "domain", "T", "orders", "grid", "scheme", "coefficients", "source", "initial", "boundary"},
               {"exact", "output"});

    const auto& dim = root["dimension"];
    if (!dim.is_number_integer() || (dim.get<int>() != 1 && dim.get<int>() != 2))
        schema_error("dimension", "expected 1 or 2");
    const bool two = dim.get<int>() == 2;

    const auto& domain = root["domain"];
    require_object(domain, "domain");
    if (two)
        check_keys(domain, "domain", {"x", "y"});
    else
        check_keys(domain, "domain", {"x"});

    const auto& orders = root["orders"];
    require_object(orders, "orders");
    if (two)
        check_keys(orders, "orders", {"gamma", "alpha", "beta"});
    else
        check_keys(orders, "orders", {"gamma", "alpha"});

    const auto& grid = root["grid"];
    require_object(grid, "grid");
    if (two)
        check_keys(grid, "grid", {"nx", "ny", "nt"});
    else
        check_keys(grid, "grid", {"nx", "nt"});

    const auto& coeffs = root["coefficients"];
    require_object(coeffs, "coefficients");
    if (two)
        check_keys(coeffs, "coefficients", {"c", "d"});
    else
        check_keys(coeffs, "coefficients", {"c"});

    RunConfig cfg;
    cfg.dimension = two ? 2 : 1;
    cfg.x = interval(domain["x"], "domain.x");
    cfg.x.cells = count(grid["nx"], "grid.nx", 3);
    if (two) {
        cfg.y = interval(domain["y"], "domain.y");
        cfg.y->cells = count(grid["ny"], "grid.ny", 3);
    }
    cfg.steps = count(grid["nt"], "grid.nt", 1);

    cfg.final_time = number(root["T"], "T");
    if (!(cfg.final_time > 0.0)) schema_error("T", "must be positive");

    cfg.gamma = number(orders["gamma"], "orders.gamma");
    if (!(cfg.gamma > 0.0 && cfg.gamma <= 1.0)) schema_error("orders.gamma", "must lie in (0, 1]");
    cfg.alpha = space_order(orders["alpha"], "orders.alpha");
    if (two) cfg.beta = space_order(orders["beta"], "orders.beta");

    const auto& scheme = root["scheme"];
    if (!scheme.is_string()) schema_error("scheme", "expected \"implicit\" or \"explicit\"");
    try {
        cfg.scheme = parse_scheme(scheme.get<std::string>());
    } catch (const Error& e) {
        schema_error("scheme", e.what());
    }

    cfg.c = expression(coeffs["c"], "coefficients.c");
    if (two) cfg.d = expression(coeffs["d"], "coefficients.d");
    cfg.source = expression(root["source"], "source");
    cfg.initial = expression(root["initial"], "initial");
    cfg.boundary = expression(root["boundary"], "boundary");
    if (root.contains("exact")) cfg.exact = expression(root["exact"], "exact");
    if (root.contains("output")) {
        if (!root["output"].is_string()) schema_error("output", "expected a path string");
        cfg.output = root["output"].get<std::string>();
    }
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot read config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace fracdiff
