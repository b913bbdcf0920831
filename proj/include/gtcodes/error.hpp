#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtcodes {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible lengths or shapes.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A parameter is outside its admissible range.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Malformed input text. Carries the 1-based line number when known.
class FormatError : public Error {
  public:
    explicit FormatError(const std::string& msg, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) { }

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// An exhaustive search would exceed the configured instance guard.
class TooLargeError : public Error {
  public:
    using Error::Error;
};

} // namespace gtcodes
