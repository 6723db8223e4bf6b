#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semistar {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
  public:
    using Error::Error;
};

/// A precondition on the algebraic input failed (zero ideal, zero
/// denominator, non-prime localization, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Arguments that are syntactically fine but semantically invalid.
class InvalidInput : public Error {
  public:
    using Error::Error;
};

/// The requested evaluation has no exact implementation for this input.
class Unsupported : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position)
    {
    }
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

}  // namespace semistar
