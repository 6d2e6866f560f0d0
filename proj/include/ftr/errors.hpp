// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FTR_ERRORS_HPP_
#define FTR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ftr {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative or adaptive scheme failed to meet its target tolerance.
/// Carries the best value reached and the associated error estimate so
/// callers can report both.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double value, double error_estimate)
      : std::runtime_error(what), value_(value), estimate_(error_estimate) {}

  double value() const { return value_; }
  double error_estimate() const { return estimate_; }

 private:
  double value_;
  double estimate_;
};

/// Result exceeds the representable range of double.
class OverflowError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Every candidate evaluation of a fit failed.
class NoFit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ftr

#endif  // FTR_ERRORS_HPP_
