#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artinsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentation text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Operands live in different ambient rings or fields.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class NotZeroDimensionalError : public Error {
 public:
  using Error::Error;
};

class UnitIdealError : public Error {
 public:
  using Error::Error;
};

/// The quotient is finite-dimensional but the origin is not its only maximal ideal.
class NotLocalError : public Error {
 public:
  using Error::Error;
};

class NotGorensteinError : public Error {
 public:
  using Error::Error;
};

/// A prescribed socle element does not generate the socle.
class BadSocleError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A degree or size guard was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace artinsum
