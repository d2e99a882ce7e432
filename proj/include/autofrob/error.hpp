#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autofrob {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction exceeded its configured state or search budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic would not fit in the 64-bit natural type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (formula, script or automaton file).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace autofrob
