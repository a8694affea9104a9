#include "fracdiff/error.hpp"

namespace fracdiff {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::SingularOrder: return "singular-order";
    case ErrorKind::Index: return "index";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::UnknownIdentifier: return "unknown-identifier";
    case ErrorKind::Arity: return "arity";
    case ErrorKind::Evaluation: return "evaluation";
    case ErrorKind::SingularMatrix: return "singular-matrix";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::NonFinite: return "non-finite";
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::OrderRange: return "order-range";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace fracdiff
