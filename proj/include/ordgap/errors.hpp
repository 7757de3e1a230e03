#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordgap {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different ring instances.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of a construction or check does not hold.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotAPositiveNonUnit : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class NoSmallestPositive : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// Enumeration was requested over a ring without a finite box structure.
class UnsupportedRing : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// A dual decreasing step produced an infeasible point.
class StepLosesFeasibility : public Error {
 public:
  StepLosesFeasibility(const std::string& what, std::size_t row)
      : Error(what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace ordgap
