#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sytdesc {

enum class ErrorKind {
    ParseError,
    NotNonIncreasing,
    NonPositivePart,
    CellOutsideShape,
    InternalInexactDivision,
    ShapeMismatch,
    DuplicateOrMissingEntry,
    RowNotIncreasing,
    ColumnNotIncreasing,
    LengthMismatch,
    UnknownBuiltin,
    NonPositiveRatio,
    NonPositiveF,
    EmptyDescentFunction,
    GuardExceeded,
    ShapeTooLarge,
    InternalInvariant,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every library failure is reported through this type; `kind()` is the
// machine-readable tag the CLI prints.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace sytdesc
