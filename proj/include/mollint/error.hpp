#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mollint {

// Base of every error raised by the library. `kind()` is a short stable tag
// used by the CLI for machine-parsable failure lines.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// A size or memory budget was exceeded (sieve limit, O(N^2) caps, ...).
class SizingError : public Error {
 public:
  explicit SizingError(const std::string& what) : Error("sizing", what) {}
};

// Argument outside the mathematical domain of the routine.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

// A precondition on structured input was violated.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error("contract", what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error("overflow", what) {}
};

// Malformed text input; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("parse", "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Numerical integration failed to reach its tolerance.
class AccuracyError : public Error {
 public:
  AccuracyError(double achieved, const std::string& what)
      : Error("accuracy", what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Quadrature resolution below the oscillation floor.
class ResolutionError : public Error {
 public:
  explicit ResolutionError(const std::string& what) : Error("resolution", what) {}
};

// Zero data does not cover the requested height window.
class CoverageError : public Error {
 public:
  explicit CoverageError(const std::string& what) : Error("coverage", what) {}
};

}  // namespace mollint
