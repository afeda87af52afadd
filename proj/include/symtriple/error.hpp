#pragma once

#include <stdexcept>
#include <string>

namespace symtriple {

enum class ErrorKind {
    DivisionByZero,
    SymbolMismatch,
    PoleAtPoint,
    ParseError,
    OrderMismatch,
    NonInvertibleConstantTerm,
    NonzeroInnerConstant,
    BadConstantTerm,
    NotReversible,
    InsufficientCoefficients,
    UnstretchPrecondition,
    IndexOutOfRange,
    InvalidTriple,
    UnknownSequence,
    UnknownTriple,
    BadParams,
    UnknownSuite,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace symtriple
