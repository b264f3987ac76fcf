#pragma once

#include <stdexcept>
#include <string>

namespace sigmaforge {

/// Caller violated a documented precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. The message always names the offending line.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive procedure would exceed its size or node budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A promise problem was handed an instance outside its promise.
class PromiseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reduction or gadget builder could not produce a certified object.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sigmaforge
