#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace icis {

enum class ErrorCode {
    InvalidInput,
    RingMismatch,
    UnknownVariable,
    IncompleteBasis,
    BudgetExhausted,
    NotZeroDimensional,
    InfiniteMilnor,
    GenericityFailure,
    Unsupported,
    Syntax,
    UnboundName,
    MissingParameter,
    MissingBinding,
    UnknownKind,
    Io,
};

/// Stable machine-readable identifier, e.g. "E_BUDGET".
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse-stage failure carrying the 1-based source position.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& message, int line, int column)
        : Error(code, message), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace icis
