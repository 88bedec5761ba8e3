#pragma once

#include <stdexcept>
#include <string>

namespace stochcube {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched sizes: wrong entry count, incompatible side lengths, index out
// of range.
struct DimensionError : Error {
  using Error::Error;
};

// Structurally valid input that violates a mathematical precondition
// (not stochastic, not a permutation tensor, parameter out of range).
struct DomainError : Error {
  using Error::Error;
};

// Malformed textual input. line/column are 1-based; 0 means unknown.
struct ParseError : Error {
  int line = 0;
  int column = 0;

  explicit ParseError(const std::string& what, int line_at = 0, int column_at = 0)
      : Error(annotate(what, line_at, column_at)), line(line_at), column(column_at) {}

 private:
  static std::string annotate(const std::string& what, int line_at, int column_at) {
    if (line_at <= 0) return what;
    std::string out = what + " (line " + std::to_string(line_at);
    if (column_at > 0) out += ", column " + std::to_string(column_at);
    return out + ")";
  }
};

// A resource guard refused the request (enumeration cap exceeded).
struct GuardError : Error {
  using Error::Error;
};

// An internal cross-check failed. This signals a bug in the library, never
// bad user input.
struct IntegrityError : Error {
  using Error::Error;
};

}  // namespace stochcube
