#include "fracdiff/config.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/solver_1d.hpp"
#include "fracdiff/solver_2d.hpp"

#include <doctest.h>

#include <string>

using namespace fracdiff;

namespace {

const std::string kZero1D = R"({
  "dimension": 1, "domain": {"x": [0, 1]}, "T": 1,
  "orders": {"gamma": 0.5, "alpha": 1.5},
  "grid": {"nx": 8, "nt": 4}, "scheme": "implicit",
  "coefficients": {"c": "1"}, "source": "0", "initial": "0", "boundary": "0"
})";

const std::string kZero2D = R"({
  "dimension": 2, "domain": {"x": [0, 1], "y": [0, 2]}, "T": 0.5,
  "orders": {"gamma": 0.5, "alpha": 1.5, "beta": 1.2},
  "grid": {"nx": 5, "ny": 6, "nt": 3}, "scheme": "explicit",
  "coefficients": {"c": "1 + x", "d": "y*t"}, "source": "0", "initial": "0", "boundary": "0",
  "output": "out.csv"
})";

std::string replace(std::string text, const std::string& from, const std::string& to)
{
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

std::string schema_message(const std::string& text)
{
    try {
        parse_config(text);
    } catch (const Error& e) {
        return std::string(e.category()) + ": " + e.what();
    }
    return "no error";
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("minimal configs load and solve to zero")
{
    const auto c1 = parse_config(kZero1D);
    CHECK(c1.dimension == 1);
    CHECK(c1.x.cells == 8);
    CHECK(c1.steps == 4);
    CHECK(c1.scheme == Scheme::Implicit);
    for (double v : solve_implicit_1d(c1.spec_1d()).final.values) CHECK(v == 0.0);

    const auto c2 = parse_config(kZero2D);
    CHECK(c2.dimension == 2);
    CHECK(c2.y->cells == 6);
    CHECK(*c2.beta == 1.2);
    CHECK(*c2.output == "out.csv");
    for (double v : solve_explicit_2d(c2.spec_2d(), SolveOptions{false, [](std::string_view) {}}).final.values)
        CHECK(v == 0.0);
    CHECK_THROWS_AS(c2.spec_1d(), Error);
}

TEST_CASE("schema errors name the key")
{
    CHECK(schema_message(replace(kZero1D, "\"gamma\": 0.5", "\"gamma\": 1.5")).rfind("schema: orders.gamma", 0) == 0);
    CHECK(schema_message(replace(kZero1D, "\"alpha\": 1.5", "\"alpha\": 1.0")).rfind("schema: orders.alpha", 0) == 0);
    CHECK(schema_message(replace(kZero1D, "\"alpha\": 1.5", "\"alpha\": 1.5, \"beta\": 1.5"))
              .rfind("schema: orders.beta: unknown key", 0) == 0);
    CHECK(schema_message(replace(kZero2D, ", \"beta\": 1.2", "")).rfind("schema: orders.beta: missing", 0) == 0);
    CHECK(schema_message(replace(kZero1D, "\"scheme\"", "\"schem\"")).rfind("schema: schem: unknown key", 0) == 0);
    CHECK(schema_message(replace(kZero1D, "\"nx\": 8", "\"nx\": 2")).rfind("schema: grid.nx", 0) == 0);
    CHECK(schema_message(replace(kZero1D, "\"nt\": 4", "\"nt\": 1.5")).rfind("schema: grid.nt", 0) == 0);
    CHECK(schema_message(replace(kZero1D, "[0, 1]", "[1, 0]")).rfind("schema: domain.x", 0) == 0);
    CHECK(schema_message(replace(kZero1D, "\"implicit\"", "\"leapfrog\"")).rfind("schema: scheme", 0) == 0);
    CHECK(schema_message(replace(kZero1D, "\"dimension\": 1", "\"dimension\": 3")).rfind("schema: dimension", 0) == 0);
    CHECK(schema_message(replace(kZero1D, "\"T\": 1", "\"T\": -1")).rfind("schema: T", 0) == 0);
    CHECK(schema_message("{").rfind("schema: invalid JSON", 0) == 0);
    CHECK(schema_message("[]").rfind("schema:", 0) == 0);
}

TEST_CASE("expression errors name the field and offset")
{
    try {
        parse_config(replace(kZero1D, "\"c\": \"1\"", "\"c\": \"x^\""));
        FAIL("expected syntax error");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).rfind("coefficients.c:", 0) == 0);
        CHECK(e.offset() == 2);
    }
    CHECK(schema_message(replace(kZero1D, "\"source\": \"0\"", "\"source\": \"q + 1\"")).rfind("unknown-identifier: source", 0) == 0);
}

TEST_CASE("missing files are I/O errors")
{
    try {
        load_config("/nonexistent/config.json");
        FAIL("expected io error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Io);
    }
}

TEST_CASE("shipped table config reproduces the first published cell")
{
    const auto cfg = load_config(std::string(FRACDIFF_SOURCE_DIR) + "/configs/table1_a12_g09.json");
    const auto spec = cfg.spec_1d();
    REQUIRE(spec.exact);
    const double err = max_error(solve_implicit_1d(spec).final, *spec.exact, spec.time.final_time);
    CHECK(std::abs(err - 3.1438e-4) / 3.1438e-4 < 0.02);

    const auto bench = benchmark_1d(1.2, 0.9, 40, 20);
    for (double x : {0.1, 0.5, 0.9}) CHECK(spec.f(x, 0.3) == doctest::Approx(bench.f(x, 0.3)).epsilon(1e-12));
}

}
