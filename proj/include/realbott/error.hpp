#pragma once

#include <stdexcept>
#include <string>

namespace realbott {

// Base class for all domain errors raised by the library. The CLI maps these
// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed matrix text. Line and column are 1-based and refer to the input
// text (line 1 is the dimension line); column is 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  int line_;
  int column_;
};

// Raised when a mathematical identity that must hold is found violated.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Checked 64-bit arithmetic failed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace realbott
