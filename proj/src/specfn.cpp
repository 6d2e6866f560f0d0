// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#include "ftr/specfn.hpp"

#include <cmath>
#include <limits>

#include "ftr/errors.hpp"

namespace ftr {
namespace {

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::floor(v);
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw DomainError(std::string(name) + " not finite");
}

}  // namespace

double legendre_coefficient(int n, int q) {
  if (n < 0 || q < 0 || 2 * q > n)
    throw DomainError("legendre_coefficient: need 0 <= 2q <= n");
  // (2n-2q)! / (q! (n-q)! (n-2q)!) built as binom(n,q)*binom(2n-2q,n) to
  // stay in range much longer than the raw factorials.
  double binom1 = 1.0;
  for (int i = 0; i < q; ++i)
    binom1 = binom1 * static_cast<double>(n - i) / static_cast<double>(i + 1);
  double binom2 = 1.0;
  for (int i = 0; i < n; ++i)
    binom2 = binom2 * static_cast<double>(2 * n - 2 * q - i) /
             static_cast<double>(i + 1);
  return binom1 * binom2;
}

double legendre_poly_sum_form(int n, double z) {
  if (n < 0) throw DomainError("legendre_poly: degree must be >= 0");
  require_finite(z, "z");
  const int half = n / 2;
  // Horner in z^2 over the descending powers z^n, z^(n-2), ..., so acc ends
  // up as sum_q (-1)^q C_q^n z^(2(half-q)).
  double acc = 0.0;
  const double z2 = z * z;
  for (int q = 0; q <= half; ++q) {
    const double c = legendre_coefficient(n, q);
    acc = acc * z2 + (q % 2 == 0 ? c : -c);
  }
  if (n % 2 == 1) acc *= z;
  return std::ldexp(acc, -n);
}

double legendre_poly(int n, double z) {
  if (n < 0) throw DomainError("legendre_poly: degree must be >= 0");
  require_finite(z, "z");
  if (n == 0) return 1.0;
  if (n == 1) return z;
  if (n <= 10) return legendre_poly_sum_form(n, z);
  double pm1 = 1.0, p = z;
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0) * z * p - static_cast<double>(k) * pm1) /
        static_cast<double>(k + 1);
    pm1 = p;
    p = next;
  }
  return p;
}

double legendre_fn(double mu, double z) {
  require_finite(mu, "mu");
  require_finite(z, "z");
  if (!(std::abs(1.0 - z) < 2.0))
    throw DomainError("legendre_fn: |1 - z| < 2 required");
  // Integer degrees route through the polynomial: the terminating series
  // cancels catastrophically from degree ~10 on, while the polynomial
  // evaluation is stable for every degree.
  if (mu >= 0.0 && std::abs(mu - std::round(mu)) <= 1e-12 * std::max(1.0, mu))
    return legendre_poly(static_cast<int>(std::llround(mu)), z);
  return gauss_2f1(-mu, mu + 1.0, 1.0, 0.5 * (1.0 - z));
}

double gauss_2f1(double a, double b, double c, double x, double tol) {
  require_finite(a, "a");
  require_finite(b, "b");
  require_finite(c, "c");
  require_finite(x, "x");
  if (is_nonpositive_integer(c))
    throw DomainError("gauss_2f1: c must not be a non-positive integer");
  if (!(std::abs(x) < 1.0))
    throw DomainError("gauss_2f1: series requires |x| < 1");
  if (x == 0.0) return 1.0;

  long terminating = -1;
  if (is_nonpositive_integer(a)) terminating = static_cast<long>(-a);
  if (is_nonpositive_integer(b)) {
    const long tb = static_cast<long>(-b);
    terminating = terminating < 0 ? tb : std::min(terminating, tb);
  }

  constexpr long kMaxIter = 200000;
  double term = 1.0, sum = 1.0;
  for (long k = 0; k < kMaxIter; ++k) {
    if (terminating >= 0 && k >= terminating) return sum;
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (terminating >= 0) continue;
    // Once the term ratio is bounded by r < 1 the tail is geometric.
    const double ratio =
        std::abs((a + k + 1.0) * (b + k + 1.0) / ((c + k + 1.0) * (k + 2.0)) * x);
    if (ratio < 1.0) {
      const double tail = std::abs(term) * ratio / (1.0 - ratio);
      if (tail <= tol * std::max(1.0, std::abs(sum))) return sum;
    }
  }
  throw NonConvergence("gauss_2f1: series did not meet tolerance", sum,
                       std::abs(term));
}

double kummer_1f1_integer(int m, double z) {
  if (m < 1) throw DomainError("kummer_1f1_integer: m must be >= 1");
  require_finite(z, "z");
  double binom = 1.0, zpow = 1.0, sum = 1.0;  // n = 0 term
  for (int n = 1; n <= m - 1; ++n) {
    binom *= static_cast<double>(m - n) / static_cast<double>(n);
    zpow *= z / static_cast<double>(n);
    sum += binom * zpow;
  }
  return std::exp(z) * sum;
}

double bessel_i0_scaled(double x) {
  require_finite(x, "x");
  x = std::abs(x);
  if (x <= 50.0) {
    // Ascending series; every term is positive, so no cancellation.
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
      term *= q / (static_cast<double>(k) * k);
      sum += term;
      if (term < sum * 1e-18) break;
    }
    return sum * std::exp(-x);
  }
  // Asymptotic expansion of e^{-x} I0(x); terms fall below 1e-18 well
  // before the divergent turnover for x > 50.
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 40; ++k) {
    const double num = (2.0 * k + 1.0) * (2.0 * k + 1.0);
    term *= num / (8.0 * x * (k + 1.0));
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

double bessel_i0(double x) {
  const double scaled = bessel_i0_scaled(x);
  const double ax = std::abs(x);
  if (ax < 709.0) return scaled * std::exp(ax);
  const double half = std::exp(0.5 * ax);
  const double value = (scaled * half) * half;
  if (!std::isfinite(value))
    throw OverflowError("bessel_i0: result exceeds double range");
  return value;
}

double lauricella_fd4(double a, const std::array<double, 4>& b, double c,
                      const std::array<double, 4>& x, const Quadrature& quad) {
  if (!(c > a) || !(a > 0.0))
    throw DomainError("lauricella_fd4: requires c > a > 0");
  for (double xi : x) {
    require_finite(xi, "x_i");
    if (xi >= 1.0) throw DomainError("lauricella_fd4: requires all x_i < 1");
  }
  for (double bi : b) require_finite(bi, "b_i");

  // t = sin^2(theta) turns the Euler integrand into
  //   2 sin^(2a-1) cos^(2(c-a)-1) prod (1 - x_i sin^2)^(-b_i),
  // which is smooth at both endpoints for the exponents used here.
  const double pa = 2.0 * a - 1.0;
  const double pb = 2.0 * (c - a) - 1.0;
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double co = std::cos(theta);
    const double t = s * s;
    double prod = 1.0;
    for (int i = 0; i < 4; ++i) {
      if (b[i] != 0.0) prod *= std::pow(1.0 - x[i] * t, -b[i]);
    }
    return 2.0 * std::pow(s, pa) * std::pow(co, pb) * prod;
  };
  const double prefactor =
      std::exp(std::lgamma(c) - std::lgamma(a) - std::lgamma(c - a));
  return prefactor * integrate(integrand, 0.0, 0.5 * M_PI, quad).value;
}

}  // namespace ftr
