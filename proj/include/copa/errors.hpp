#pragma once

#include <stdexcept>
#include <string>

namespace copa {

enum class ErrorKind {
    InvalidArgument,  // bad inputs, undeclared names, arity errors
    Mismatch,         // non-composable morphisms, non-commuting squares
    Budget,           // search budget exhausted; NOT a negative answer
    SizeGuard,        // state-space cap exceeded before allocation
    Parse,            // syntax errors with line/column
    Validation,       // object failed its validator
    NotFound,         // named object missing from a workspace
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace copa
