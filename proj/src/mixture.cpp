// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact evaluation of the mixture weights. The defining integral
//   alpha_i = 2(-1)^i / ((2M-1)(2M-i)!(i-1)!) *
//               int_0^{2M-1} prod_{k != i} (u - k + i) du
// mixes factorially large alternating terms, so the product polynomial is
// expanded over arbitrary-precision integers and integrated term-wise as an
// exact rational; only the final weight is rounded to double.

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ftr/errors.hpp"
#include "ftr/model.hpp"

namespace ftr {
namespace {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

bigint factorial_big(int n) {
  bigint acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

// Coefficients of prod_{k=1..2M, k != i} (u - (k - 1)), ascending powers:
// the Lagrange numerator over the nodes 0..2M-1 with node i-1 removed. The
// defining formula prints the offset as "- k + i", which makes the weights
// sum to 3/2 already at M = 2 (exact rational check); with "+1" they are
// the symmetric Newton-Cotes-type weights and sum to exactly 1, which is
// what the normalization of the approximated density requires.
std::vector<bigint> lagrange_numerator(int big_m, int i) {
  std::vector<bigint> poly{1};
  for (int k = 1; k <= 2 * big_m; ++k) {
    if (k == i) continue;
    const long root = k - 1;
    std::vector<bigint> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= root * poly[d];
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

MixtureCoeffs mixture_coeffs(const FtrParams& p, int M) {
  p.validate();
  if (M < 1) throw DomainError("mixture_coeffs: M must be >= 1");
  if (static_cast<double>(M) < std::ceil(p.K * p.Delta) + 0.5)
    throw DomainError("mixture_coeffs: requires M > ceil(K*Delta)");

  MixtureCoeffs out;
  out.M = M;
  out.precision_warning = M > 25;
  out.alpha.resize(static_cast<std::size_t>(M));
  out.delta.resize(static_cast<std::size_t>(M));

  const int upper = 2 * M - 1;
  bigrat exact_sum = 0;
  for (int i = 1; i <= M; ++i) {
    const std::vector<bigint> poly = lagrange_numerator(M, i);
    bigrat integral = 0;
    bigint upow = upper;  // upper^(d+1)
    for (std::size_t d = 0; d < poly.size(); ++d) {
      integral += bigrat(poly[d] * upow, static_cast<int>(d) + 1);
      upow *= upper;
    }
    bigrat alpha = bigrat(2, bigint(upper) * factorial_big(2 * M - i) *
                                 factorial_big(i - 1)) *
                   integral;
    if (i % 2 != 0) alpha = -alpha;
    exact_sum += alpha;
    out.alpha[static_cast<std::size_t>(i - 1)] = alpha.convert_to<double>();
    out.delta[static_cast<std::size_t>(i - 1)] =
        p.Delta * std::cos((i - 1) * M_PI / upper);
  }
  out.alpha_sum_error = abs(exact_sum - 1).convert_to<double>();
  return out;
}

}  // namespace ftr
