#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympcliff {

/// Base of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A value does not fit the target representation (e.g. Rational -> double).
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments of an operation was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical method did not converge within its sweep budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Lexing or parsing failure. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position,
             std::vector<std::string> expected = {})
      : Error(message + " at offset " + std::to_string(position)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Evaluation of a well-formed expression failed (type mismatch, bad call).
/// `position` is the byte offset of the offending subexpression, if known.
class EvalError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit EvalError(const std::string& message, std::size_t position = npos)
      : Error(position == npos ? message : message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sympcliff
