// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#include "ftr/laplace.hpp"

#include <cmath>
#include <vector>

#include "ftr/errors.hpp"

namespace ftr {
namespace {

using cplx = std::complex<double>;

constexpr int kEulerAvg = 13;

double euler_raw(const LaplaceTransform& T, double t, int n_burn,
                 double euler_a, double* neighbour) {
  const double half_a = 0.5 * euler_a;
  const int total = n_burn + kEulerAvg;

  std::vector<double> partial(static_cast<std::size_t>(total) + 1);
  double sum = 0.5 * T(cplx(half_a / t, 0.0)).real();
  partial[0] = sum;  // unused; partial sums recorded from k = 1
  double sign = -1.0;
  for (int k = 1; k <= total; ++k) {
    const cplx s(half_a / t, M_PI * k / t);
    sum += sign * T(s).real();
    sign = -sign;
    partial[static_cast<std::size_t>(k)] = sum;
  }

  // Binomial (Euler) averaging of the tail, over windows ending at the last
  // and next-to-last partial sums; their difference is the error signal.
  auto averaged = [&partial](int n) {
    double acc = 0.0, binom = 1.0;
    double denom = std::ldexp(1.0, -kEulerAvg);
    for (int j = 0; j <= kEulerAvg; ++j) {
      acc += binom * partial[static_cast<std::size_t>(n + j)];
      binom = binom * (kEulerAvg - j) / (j + 1.0);
    }
    return acc * denom;
  };
  const double scale = std::exp(half_a) / t;
  const double value = scale * averaged(n_burn);
  if (neighbour != nullptr) *neighbour = scale * averaged(n_burn - 1);
  return value;
}

double talbot_raw(const LaplaceTransform& T, double t, int nodes) {
  const double r = 0.4 * nodes / t;  // 2M/(5t)
  double acc = 0.5 * std::exp(r * t) * T(cplx(r, 0.0)).real();
  for (int k = 1; k < nodes; ++k) {
    const double theta = M_PI * k / nodes;
    const double cot = std::cos(theta) / std::sin(theta);
    const cplx s(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    const cplx contribution = std::exp(s * t) * T(s) * cplx(1.0, sigma);
    acc += contribution.real();
  }
  return acc * r / nodes;
}

}  // namespace

void LaplaceInversion::validate() const {
  if (terms < 10)
    throw DomainError("LaplaceInversion: terms must be >= 10");
  if (!(target_rel_error > 0.0))
    throw DomainError("LaplaceInversion: target_rel_error must be > 0");
  if (!(euler_a > 1.0) || !(euler_a < 60.0))
    throw DomainError("LaplaceInversion: euler_a must lie in (1, 60)");
}

InversionResult inverse_laplace(const LaplaceTransform& transform, double x,
                                const LaplaceInversion& cfg) {
  cfg.validate();
  if (!(x > 0.0)) throw DomainError("inverse_laplace: x must be > 0");

  // Shift so every singularity sits left of the contour; for abscissa <= 0
  // the standard contours already qualify.
  const double shift = cfg.singularity_abscissa > 0.0
                           ? cfg.singularity_abscissa
                           : 0.0;
  LaplaceTransform shifted = transform;
  if (shift > 0.0)
    shifted = [&transform, shift](cplx s) { return transform(s + shift); };

  double value = 0.0, alt = 0.0;
  if (cfg.method == InversionMethod::kEulerSummation) {
    value = euler_raw(shifted, x, cfg.terms, cfg.euler_a, &alt);
  } else {
    value = talbot_raw(shifted, x, cfg.terms);
    const int fewer = std::max(10, cfg.terms - std::max(4, cfg.terms / 5));
    alt = talbot_raw(shifted, x, fewer);
  }
  if (shift > 0.0) {
    const double grow = std::exp(shift * x);
    value *= grow;
    alt *= grow;
  }

  const double denom = std::max(std::abs(value), 1e-300);
  InversionResult result{value, std::abs(value - alt) / denom};
  if (result.rel_error_estimate > cfg.target_rel_error)
    throw NonConvergence("inverse_laplace: error estimate above target",
                         result.value, result.rel_error_estimate);
  return result;
}

}  // namespace ftr
