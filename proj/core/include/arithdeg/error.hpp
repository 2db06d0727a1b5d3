#ifndef ARITHDEG_ERROR_HPP
#define ARITHDEG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arithdeg {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (or modules of different shape).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; this is a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based; zero means
/// "not known".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) {
      return column == 0 ? what
                         : "column " + std::to_string(column) + ": " + what;
    }
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace arithdeg

#endif  // ARITHDEG_ERROR_HPP
