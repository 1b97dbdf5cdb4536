#pragma once

#include <stdexcept>
#include <string>

namespace fnspect {

// Query point lies outside the model's domain.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A computed result violated an internal invariant. Maps to exit code 2.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Positioned error from the function-spec parser. Line and column are 1-based.
class SpecError : public std::runtime_error {
public:
  SpecError(int line, int col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + message),
        line_(line), col_(col), message_(message) {}

  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& message() const { return message_; }

private:
  int line_;
  int col_;
  std::string message_;
};

}  // namespace fnspect
