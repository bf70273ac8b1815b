#pragma once

#include <stdexcept>
#include <string>

namespace vacuum {

/// Input outside an operation's mathematical domain (d <= 0, t < 0, k = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested closed form only exists for some cutoff families.
class UnsupportedFamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A least-squares extrapolation could not be set up (too few, repeated or
/// unordered sample points).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An adaptive quadrature or series ran out of budget before meeting its
/// tolerance. Carries the best estimate reached so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial_value, double error_bound)
      : std::runtime_error(what), partial_value_(partial_value), error_bound_(error_bound) {}

  double partial_value() const noexcept { return partial_value_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double partial_value_;
  double error_bound_;
};

}  // namespace vacuum
