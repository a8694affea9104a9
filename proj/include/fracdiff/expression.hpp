#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fracdiff {

/// Scalar expression over the variables x, y and t.
///
/// Grammar (^ is right-associative and binds tighter than unary minus):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?
///     primary := number | ident | ident '(' args ')' | '(' expr ')'
///
/// Functions: sin cos exp log sqrt abs tgamma (one argument), pow (two).
/// Constants: pi. Parsed trees are immutable and cheap to copy.
class Expr {
public:
    struct Node;

    explicit Expr(Node node);

    const Node& node() const noexcept { return *node_; }

    /// Throws ErrorKind::Evaluation if any intermediate result is NaN or infinite.
    double eval(double x, double y, double t) const;

    /// Fully parenthesized text that re-parses to a structurally identical tree.
    std::string to_string() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    std::shared_ptr<const Node> node_;
};

namespace ast {

enum class Var { X, Y, T };
enum class Op { Add, Sub, Mul, Div, Pow };
enum class Fn { Sin, Cos, Exp, Log, Sqrt, Abs, Pow, Tgamma };

struct Number { double value; };
struct Variable { Var var; };
struct Pi {};
struct Negate { Expr operand; };
struct Binary { Op op; Expr lhs; Expr rhs; };
struct Call { Fn fn; std::vector<Expr> args; };

bool operator==(const Number& a, const Number& b);  // bitwise
bool operator==(const Variable& a, const Variable& b);
bool operator==(const Pi&, const Pi&);
bool operator==(const Negate& a, const Negate& b);
bool operator==(const Binary& a, const Binary& b);
bool operator==(const Call& a, const Call& b);

}  // namespace ast

struct Expr::Node {
    std::variant<ast::Number, ast::Variable, ast::Pi, ast::Negate, ast::Binary, ast::Call> value;
};

template <class T>
Expr make_expr(T node)
{
    return Expr(Expr::Node{std::move(node)});
}

/// Throws SyntaxError (kinds Syntax, UnknownIdentifier, Arity) carrying the byte offset.
Expr parse_expression(std::string_view source);

double eval(const Expr& e, double x, double y, double t);

}  // namespace fracdiff
