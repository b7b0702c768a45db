#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triwidth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed text input; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line = 0, std::size_t col = 0)
      : Error(line ? msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"
                   : msg),
        line_(line), col_(col) {}
  const char* kind() const noexcept override { return "parse"; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::size_t line_, col_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

class SortError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "sort"; }
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget"; }
};

class DimensionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension"; }
};

}  // namespace triwidth
