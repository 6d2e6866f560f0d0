// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0
//
// Special-function substrate: Legendre polynomials and functions, Gauss and
// Kummer hypergeometrics, the modified Bessel function I0, and the fourth
// Lauricella function F_D^(4) through its one-dimensional Euler integral.

#ifndef FTR_SPECFN_HPP_
#define FTR_SPECFN_HPP_

#include <array>

#include "ftr/quadrature.hpp"

namespace ftr {

/// Legendre polynomial P_n(z). Uses the explicit descending-power sum for
/// n <= 10 and the upward three-term recurrence above that; the two routes
/// agree to ~1e-13 relative on |z| <= 10 (checked in the test suite).
double legendre_poly(int n, double z);

/// P_n(z) evaluated strictly by the closed coefficient sum
/// 2^-n * sum_q (-1)^q C_q^n z^(n-2q). Exposed for cross-checking; prefer
/// legendre_poly, which switches to the recurrence where the sum cancels.
double legendre_poly_sum_form(int n, double z);

/// Coefficient C_q^n = (2n-2q)! / (q! (n-q)! (n-2q)!) of the Legendre sum.
double legendre_coefficient(int n, int q);

/// Legendre function of the first kind of (real) degree mu,
/// P_mu(z) = 2F1(-mu, mu+1; 1; (1-z)/2), valid for |1 - z| < 2.
/// Throws DomainError outside the convergence region.
double legendre_fn(double mu, double z);

/// Gauss hypergeometric 2F1(a, b; c; x) by its power series. Requires
/// |x| < 1 and c not a non-positive integer; terminates early when a or b
/// is a non-positive integer. Throws NonConvergence if the series tail
/// cannot be bounded below `tol` within the iteration cap.
double gauss_2f1(double a, double b, double c, double x, double tol = 1e-14);

/// Kummer 1F1(m, 1; z) for positive integer m, via the Laguerre-polynomial
/// form e^z * sum_{n<m} C(m-1,n) z^n / n!.
double kummer_1f1_integer(int m, double z);

/// Modified Bessel function I0(x), relative error below 1e-12 for
/// |x| <= 700. Throws OverflowError once e^|x| passes the double range.
double bessel_i0(double x);

/// Exponentially scaled variant e^{-|x|} I0(x), finite for all x.
double bessel_i0_scaled(double x);

/// Lauricella F_D^(4)(a; b1..b4; c; x1..x4) computed from the Euler
/// integral
///   Gamma(c)/(Gamma(a)Gamma(c-a)) *
///     int_0^1 t^(a-1) (1-t)^(c-a-1) prod_i (1-x_i t)^(-b_i) dt,
/// which requires c > a > 0 and all x_i < 1.
double lauricella_fd4(double a, const std::array<double, 4>& b, double c,
                      const std::array<double, 4>& x,
                      const Quadrature& quad = {});

}  // namespace ftr

#endif  // FTR_SPECFN_HPP_
