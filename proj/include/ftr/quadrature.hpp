// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FTR_QUADRATURE_HPP_
#define FTR_QUADRATURE_HPP_

#include <functional>

namespace ftr {

/// Tolerances for adaptive Gauss-Kronrod integration.
struct Quadrature {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 512;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

/// Adaptive G7-K15 integration of f over the finite interval [a, b].
/// Bisects the interval with the largest Kronrod error estimate until
/// sum(errors) <= max(abs_tol, rel_tol*|value|). Throws NonConvergence
/// when max_subdivisions is exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const Quadrature& cfg = {});

/// Integration over [a, inf) via the rational map x = a + t/(1-t).
QuadratureResult integrate_to_inf(const std::function<double(double)>& f,
                                  double a, const Quadrature& cfg = {});

}  // namespace ftr

#endif  // FTR_QUADRATURE_HPP_
