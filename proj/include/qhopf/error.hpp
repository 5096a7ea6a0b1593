#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    ArityMismatch,
    NotInvertible,
    InternalInconsistency,
    AntipodeNotInvertible,
    InvalidTwist,
    NotFactorizable,
    NotInvolutory,
    SolutionSpaceTooLarge,
    NoNormalizedIntegral,
    NoIntegral,
    CharTwo,
    FieldUnsuitable,
    Parse,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace qhopf
