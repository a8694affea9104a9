#include "fracdiff/expression.hpp"

#include "fracdiff/error.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <cctype>
#include <cstdio>
#include <numbers>
#include <utility>

namespace fracdiff {

namespace {

struct FunctionInfo {
    std::string_view name;
    ast::Fn fn;
    std::size_t arity;
};

constexpr FunctionInfo kFunctions[] = {
    {"sin", ast::Fn::Sin, 1},   {"cos", ast::Fn::Cos, 1},   {"exp", ast::Fn::Exp, 1},
    {"log", ast::Fn::Log, 1},   {"sqrt", ast::Fn::Sqrt, 1}, {"abs", ast::Fn::Abs, 1},
    {"pow", ast::Fn::Pow, 2},   {"tgamma", ast::Fn::Tgamma, 1},
};

std::string_view function_name(ast::Fn fn)
{
    for (const auto& f : kFunctions)
        if (f.fn == fn) return f.name;
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr parse()
    {
        skip_space();
        if (pos_ == src_.size()) fail("empty expression");
        Expr e = expr();
        skip_space();
        if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::Syntax) const
    {
        throw SyntaxError(kind, msg, pos_);
    }

    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr expr()
    {
        Expr lhs = term();
        for (;;) {
            if (accept('+')) lhs = make_expr(ast::Binary{ast::Op::Add, std::move(lhs), term()});
            else if (accept('-')) lhs = make_expr(ast::Binary{ast::Op::Sub, std::move(lhs), term()});
            else return lhs;
        }
    }

    Expr term()
    {
        Expr lhs = unary();
        for (;;) {
            if (accept('*')) lhs = make_expr(ast::Binary{ast::Op::Mul, std::move(lhs), unary()});
            else if (accept('/')) lhs = make_expr(ast::Binary{ast::Op::Div, std::move(lhs), unary()});
            else return lhs;
        }
    }

    Expr unary()
    {
        if (accept('-')) return make_expr(ast::Negate{unary()});
        return power();
    }

    Expr power()
    {
        Expr base = primary();
        if (accept('^')) return make_expr(ast::Binary{ast::Op::Pow, std::move(base), unary()});
        return base;
    }

    Expr primary()
    {
        skip_space();
        if (pos_ == src_.size()) fail("unexpected end of expression");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail(std::string("unexpected '") + c + "'");
    }

    Expr number()
    {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t save = pos_++;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits();
            else pos_ = save;
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_) {
            pos_ = start;
            fail("malformed number");
        }
        return make_expr(ast::Number{value});
    }

    Expr identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);

        skip_space();
        if (pos_ < src_.size() && src_[pos_] == '(') {
            const FunctionInfo* info = nullptr;
            for (const auto& f : kFunctions)
                if (f.name == name) info = &f;
            if (!info) {
                pos_ = start;
                fail("unknown function '" + std::string(name) + "'", ErrorKind::UnknownIdentifier);
            }
            ++pos_;
            std::vector<Expr> args;
            if (!accept(')')) {
                do args.push_back(expr());
                while (accept(','));
                if (!accept(')')) fail("expected ')' or ','");
            }
            if (args.size() != info->arity) {
                pos_ = start;
                fail(std::string(name) + " takes " + std::to_string(info->arity) + " argument(s), got " +
                         std::to_string(args.size()),
                     ErrorKind::Arity);
            }
            return make_expr(ast::Call{info->fn, std::move(args)});
        }

        if (name == "x") return make_expr(ast::Variable{ast::Var::X});
        if (name == "y") return make_expr(ast::Variable{ast::Var::Y});
        if (name == "t") return make_expr(ast::Variable{ast::Var::T});
        if (name == "pi") return make_expr(ast::Pi{});
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'", ErrorKind::UnknownIdentifier);
    }
};

double checked(double v)
{
    if (!std::isfinite(v)) throw Error(ErrorKind::Evaluation, "expression produced a non-finite value");
    return v;
}

struct Evaluator {
    double x, y, t;

    double operator()(const ast::Number& n) const { return n.value; }
    double operator()(const ast::Pi&) const { return std::numbers::pi; }
    double operator()(const ast::Variable& v) const
    {
        switch (v.var) {
        case ast::Var::X: return x;
        case ast::Var::Y: return y;
        case ast::Var::T: return t;
        }
        return 0.0;
    }
    double operator()(const ast::Negate& n) const { return -std::visit(*this, n.operand.node().value); }
    double operator()(const ast::Binary& b) const
    {
        const double l = std::visit(*this, b.lhs.node().value);
        const double r = std::visit(*this, b.rhs.node().value);
        switch (b.op) {
        case ast::Op::Add: return checked(l + r);
        case ast::Op::Sub: return checked(l - r);
        case ast::Op::Mul: return checked(l * r);
        case ast::Op::Div: return checked(l / r);
        case ast::Op::Pow: return checked(std::pow(l, r));
        }
        return 0.0;
    }
    double operator()(const ast::Call& c) const
    {
        const double a = std::visit(*this, c.args[0].node().value);
        switch (c.fn) {
        case ast::Fn::Sin: return checked(std::sin(a));
        case ast::Fn::Cos: return checked(std::cos(a));
        case ast::Fn::Exp: return checked(std::exp(a));
        case ast::Fn::Log: return checked(std::log(a));
        case ast::Fn::Sqrt: return checked(std::sqrt(a));
        case ast::Fn::Abs: return std::abs(a);
        case ast::Fn::Pow: return checked(std::pow(a, std::visit(*this, c.args[1].node().value)));
        case ast::Fn::Tgamma: return checked(std::tgamma(a));
        }
        return 0.0;
    }
};

struct Printer {
    std::string operator()(const ast::Number& n) const
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", n.value);
        return buf;
    }
    std::string operator()(const ast::Pi&) const { return "pi"; }
    std::string operator()(const ast::Variable& v) const
    {
        switch (v.var) {
        case ast::Var::X: return "x";
        case ast::Var::Y: return "y";
        case ast::Var::T: return "t";
        }
        return "?";
    }
    std::string operator()(const ast::Negate& n) const { return "(-" + n.operand.to_string() + ")"; }
    std::string operator()(const ast::Binary& b) const
    {
        static constexpr char ops[] = {'+', '-', '*', '/', '^'};
        return "(" + b.lhs.to_string() + " " + ops[static_cast<int>(b.op)] + " " + b.rhs.to_string() + ")";
    }
    std::string operator()(const ast::Call& c) const
    {
        std::string out(function_name(c.fn));
        out += '(';
        for (std::size_t i = 0; i < c.args.size(); ++i) {
            if (i) out += ", ";
            out += c.args[i].to_string();
        }
        return out + ')';
    }
};

}  // namespace

Expr::Expr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

double Expr::eval(double x, double y, double t) const
{
    return checked(std::visit(Evaluator{x, y, t}, node_->value));
}

std::string Expr::to_string() const { return std::visit(Printer{}, node_->value); }

bool operator==(const Expr& a, const Expr& b) { return a.node_ == b.node_ || a.node_->value == b.node_->value; }

namespace ast {

bool operator==(const Number& a, const Number& b)
{
    return std::bit_cast<std::uint64_t>(a.value) == std::bit_cast<std::uint64_t>(b.value);
}
bool operator==(const Variable& a, const Variable& b) { return a.var == b.var; }
bool operator==(const Pi&, const Pi&) { return true; }
bool operator==(const Negate& a, const Negate& b) { return a.operand == b.operand; }
bool operator==(const Binary& a, const Binary& b)
{
    return a.op == b.op && a.lhs == b.lhs && a.rhs == b.rhs;
}
bool operator==(const Call& a, const Call& b) { return a.fn == b.fn && a.args == b.args; }

}  // namespace ast

Expr parse_expression(std::string_view source) { return Parser(source).parse(); }

double eval(const Expr& e, double x, double y, double t) { return e.eval(x, y, t); }

}  // namespace fracdiff
