#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heisenspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input that parses but violates a precondition (range, duplicate edge, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A requested object exceeds a configured size guard.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver gave up before reaching its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double residual)
      : Error(message), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace heisenspec
