#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fracdiff {

/// Failure categories. The CLI prints these as the `error: <category>:` prefix.
enum class ErrorKind {
    Domain,
    SingularOrder,
    Index,
    Syntax,
    UnknownIdentifier,
    Arity,
    Evaluation,
    SingularMatrix,
    Dimension,
    NonFinite,
    InvalidOrder,
    OrderRange,
    Schema,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view category() const noexcept { return to_string(kind_); }

private:
    ErrorKind kind_;
};

/// Parse failure with the byte offset into the source text.
class SyntaxError : public Error {
public:
    SyntaxError(ErrorKind kind, const std::string& message, std::size_t offset)
        : Error(kind, message + " at offset " + std::to_string(offset)), detail_(message), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }
    /// The message without the offset suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

/// Raised by the time steppers; carries the step that produced the failure.
class StepError : public Error {
public:
    StepError(ErrorKind kind, const std::string& message, std::size_t step)
        : Error(kind, message + " (step " + std::to_string(step) + ")"), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace fracdiff
