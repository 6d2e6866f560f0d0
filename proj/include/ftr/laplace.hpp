// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0
//
// Numerical inversion of Laplace transforms on the real line. Two
// independent algorithms are provided so each can serve as an error oracle
// for the other: Euler-accelerated Bromwich summation (Abate-Whitt) and the
// fixed Talbot deformed contour (Abate-Valko).

#ifndef FTR_LAPLACE_HPP_
#define FTR_LAPLACE_HPP_

#include <complex>
#include <functional>

namespace ftr {

enum class InversionMethod { kEulerSummation, kFixedTalbot };

struct LaplaceInversion {
  InversionMethod method = InversionMethod::kEulerSummation;
  /// Euler summation: terms before binomial averaging. Fixed Talbot:
  /// contour nodes. Must be >= 10.
  int terms = 45;
  double target_rel_error = 1e-7;
  /// Upper bound for the real part of the rightmost singularity. When
  /// positive the transform is shifted so the contour stays to its right;
  /// transforms of probability densities on [0, inf) can leave this at 0.
  double singularity_abscissa = 0.0;
  /// Euler discretization parameter: exp(-a) bounds the aliasing error,
  /// exp(a/2)*eps the rounding noise. 21 suits transforms whose original
  /// decays; callers inverting shifted (slowly decaying) transforms can
  /// afford more.
  double euler_a = 21.0;

  void validate() const;
};

struct InversionResult {
  double value = 0.0;
  /// Estimated relative error, from the difference of two internal
  /// evaluations at different resolution.
  double rel_error_estimate = 0.0;
};

using LaplaceTransform =
    std::function<std::complex<double>(std::complex<double>)>;

/// Evaluates f(x) = L^-1[transform](x) for x > 0. The returned estimate is
/// reported alongside the value; NonConvergence (carrying both) is thrown
/// when the estimate exceeds cfg.target_rel_error.
InversionResult inverse_laplace(const LaplaceTransform& transform, double x,
                                const LaplaceInversion& cfg = {});

}  // namespace ftr

#endif  // FTR_LAPLACE_HPP_
