#ifndef GRL_ERROR_HPP
#define GRL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grl {

enum class ErrorKind {
    UnknownType,
    UnknownName,
    TypeMismatch,
    SupportViolation,
    BoundaryMismatch,
    OutOfRange,
    MarginalViolation,
    NotAFunction,
    Syntax,
    Io,
};

const char* to_string(ErrorKind kind);

// Base exception for every validation failure raised by the engine.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace grl

#endif // GRL_ERROR_HPP
