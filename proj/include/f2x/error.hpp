// error.hpp - exception types shared by every f2x module.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace f2x {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed polynomial or function-expression text. position is a 0-based
// offset into the original input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Violated precondition: division by zero, 0^0, factoring 0, reducible prime...
class DomainError : public Error {
public:
    using Error::Error;
};

// A caller-visible bound was exceeded (divisor list size, search degree).
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace f2x
