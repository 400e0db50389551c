#pragma once

#include <stdexcept>
#include <string>

namespace dirichlet {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the expression parser; carries the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised when a precondition on a weight or exponent is violated
/// (e.g. requesting a trace at an endpoint where the weight lacks the
/// matching B_p condition).
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace dirichlet
