#pragma once

#include <stdexcept>
#include <string>

namespace starkvqe {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature gave up; carries what it had when it stopped.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}
  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// Iterative solver stopped without meeting its criteria.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, int iterations, double last_value)
      : std::runtime_error(what), iterations_(iterations), last_value_(last_value) {}
  int iterations() const noexcept { return iterations_; }
  double last_value() const noexcept { return last_value_; }

 private:
  int iterations_;
  double last_value_;
};

// Bad user configuration (CLI flags, config file).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace starkvqe
