// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0
//
// Distribution fitting against empirical amplitude CDFs using the modified
// Kolmogorov-Smirnov error factor
//   epsilon = max_x |log10 Fhat_r(x) - log10 F_r(x)|,
// evaluated over the empirical support. FTR parameters are searched on a
// coarse (K, Delta) grid per candidate m and refined by Nelder-Mead; the
// Rician baseline is a one-dimensional search in K.

#ifndef FTR_FIT_HPP_
#define FTR_FIT_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ftr/laplace.hpp"
#include "ftr/model.hpp"

namespace ftr {

/// Sorted empirical amplitude CDF: strictly increasing amplitudes with
/// probabilities in (0, 1], non-decreasing, at least 10 points.
struct EmpiricalCdf {
  struct Point {
    double amplitude;
    double probability;
  };
  std::vector<Point> points;

  void validate() const;

  /// Stieltjes estimate of E[r^2]; residual mass above the last point is
  /// assigned to the last amplitude.
  double second_moment() const;

  /// Decimated ECDF of a sample set: up to max_points support points with
  /// quantile levels inside [p_min, p_max]. Levels outside that window are
  /// dropped (the extreme order statistics carry log-scale noise that the
  /// error factor would only amplify).
  static EmpiricalCdf from_samples(std::vector<double> amplitudes,
                                   int max_points, double p_min = 0.0,
                                   double p_max = 1.0);

  /// Reads CSV with header "amplitude,cdf". Probabilities of exactly 0 are
  /// rejected (they have no log-scale image).
  static EmpiricalCdf read_csv(std::istream& is);
};

struct SearchConfig {
  double k_min = 0.1;
  double k_max = 200.0;
  int k_points = 40;
  double delta_step = 0.05;
  /// Nelder-Mead refinement iterations on (log K, Delta) at fixed m.
  int refine_iterations = 160;

  void validate() const;
};

/// Fit outcome. m is +infinity for the Rician baseline (its cell in the
/// special-case table is the m -> inf limit, which has no finite-m
/// representation).
struct FitResult {
  double K = 0.0;
  double Delta = 0.0;
  double m = 1.0;
  double omega = 1.0;
  double epsilon = 0.0;
  std::int64_t evaluations = 0;

  /// The fitted parameters as an FtrParams (gamma_bar carries omega);
  /// throws DomainError for the Rician limit.
  FtrParams params() const;
};

/// Modified KS error factor of p against the empirical CDF, with
/// p.gamma_bar interpreted as the mean square envelope. The theoretical
/// envelope CDF is F_gamma(r^2) through the exact inversion path (integer
/// m). Throws DomainError if the theoretical CDF vanishes at a support
/// point.
double epsilon(const EmpiricalCdf& emp, const FtrParams& p);

/// Error factor of the Rician baseline with ratio k and mean square
/// envelope omega.
double epsilon_rician(const EmpiricalCdf& emp, double k, double omega);

/// Rician envelope CDF (noncentral chi-square series), the baseline model.
double rician_envelope_cdf(double k, double omega, double r);

/// Default fluctuation-index candidates: {1..12, 15, 20}.
std::vector<int> default_m_candidates();

/// Minimizes epsilon over the (K, Delta, m) search space; omega is pinned
/// to the empirical second moment. Deterministic for fixed inputs. Throws
/// NoFit when every evaluation fails.
FitResult fit_ftr(const EmpiricalCdf& emp,
                  const std::vector<int>& m_candidates = default_m_candidates(),
                  const SearchConfig& search = {});

/// One-dimensional epsilon minimization over the Rician K.
FitResult fit_rician(const EmpiricalCdf& emp, const SearchConfig& search = {});

}  // namespace ftr

#endif  // FTR_FIT_HPP_
