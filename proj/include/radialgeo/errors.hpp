#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radialgeo {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (negative t, n < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inputs are individually valid but inconsistent with each other
/// (malformed profile, window shorter than the tail regime, ...).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// The Jacobi integrator could not advance.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double reached_t)
      : Error(what + " (reached t=" + std::to_string(reached_t) + ")"), reached_t_(reached_t) {}
  double reached_t() const noexcept { return reached_t_; }

 private:
  double reached_t_;
};

class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

/// Malformed volume-sample input; `row` is the 1-based line number (0 for whole-file problems).
class IngestionError : public Error {
 public:
  IngestionError(const std::string& what, std::size_t row)
      : Error(row == 0 ? what : "row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// The warping function vanishes at `first_zero`, so the model surface closes up
/// and the noncompactness hypothesis fails.
class ModelCompactnessError : public Error {
 public:
  explicit ModelCompactnessError(double first_zero)
      : Error("warping function vanishes at t=" + std::to_string(first_zero) +
              "; the model surface is compact"),
        first_zero_(first_zero) {}
  double first_zero() const noexcept { return first_zero_; }

 private:
  double first_zero_;
};

}  // namespace radialgeo
