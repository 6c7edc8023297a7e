#pragma once

#include <stdexcept>
#include <string>

namespace catnerve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: out-of-range ids, endpoint mismatches, bad tables.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A structure was well-formed but violates a law it is meant to satisfy.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An enumeration exceeded its search-node budget.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A presentation has a hom-set with a normal form at the length bound.
class NonFinitableError : public Error {
 public:
  using Error::Error;
};

/// A check that must hold by a theorem failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string const& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace catnerve
