#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loccalc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Process exit status the CLI maps this error to.
  virtual int exitCode() const noexcept { return 3; }
};

/// Malformed input: bad command-line arguments or unparseable expressions.
class UsageError : public Error {
 public:
  using Error::Error;
  int exitCode() const noexcept override { return 2; }
};

/// Syntax error in a polynomial expression, positioned at a byte offset.
class ParseError : public UsageError {
 public:
  ParseError(std::string message, std::size_t position,
             std::vector<std::string> expected = {})
      : UsageError(std::move(message)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// An operation was called outside its domain (ring mismatch, invalid rank, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
  int exitCode() const noexcept override { return 3; }
};

/// An internal invariant failed; for valid input this indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
  int exitCode() const noexcept override { return 4; }
};

}  // namespace loccalc
