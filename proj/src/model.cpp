// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#include "ftr/model.hpp"

#include <algorithm>
#include <cmath>

#include "ftr/errors.hpp"
#include "ftr/quadrature.hpp"
#include "ftr/specfn.hpp"

namespace ftr {
namespace {

using cplx = std::complex<double>;

constexpr double kIntegerTol = 1e-9;
// Parameter values at or above these count as the K -> inf / m -> inf
// limiting rows of the special-case table.
constexpr double kSurrogateK = 1e5;
constexpr double kSurrogateM = 1e3;

bool near(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol;
}

/// log P_n(z) for z >= 1 via the upward recurrence with rescaling, so
/// degrees in the thousands (limit surrogates) stay representable.
double legendre_poly_log(int n, double z) {
  if (n == 0) return 0.0;
  double pm1 = 1.0, p = z, logscale = 0.0;
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0) * z * p - static_cast<double>(k) * pm1) /
        static_cast<double>(k + 1);
    pm1 = p;
    p = next;
    if (std::abs(p) > 1e200) {
      pm1 *= 1e-200;
      p *= 1e-200;
      logscale += 200.0 * M_LN10;
    }
  }
  return std::log(p) + logscale;
}

/// Quadratic from the MGF denominator. For s <= 0 all three terms are
/// non-negative, so the sum never cancels.
double mgf_quadratic(const FtrParams& p, double s) {
  const double gs = p.gamma_bar * s;
  const double mk = p.m + p.K;
  const double dk = p.Delta * p.K;
  return (mk * mk - dk * dk) * gs * gs -
         2.0 * p.m * (1.0 + p.K) * mk * gs +
         p.m * p.m * (1.0 + p.K) * (1.0 + p.K);
}

/// MGF evaluation without the sign restriction on s; used for the
/// derivative at the origin, where the formula is analytic on both sides.
double mgf_formula(const FtrParams& p, double s) {
  if (s == 0.0) return 1.0;
  const double r = mgf_quadratic(p, s);
  const double t = 1.0 + p.K - p.gamma_bar * s;
  const double mt = p.m * t;
  const double z = (p.m * (1.0 + p.K) - (p.m + p.K) * p.gamma_bar * s) /
                   std::sqrt(r);
  // m^m (1+K) t^(m-1) R^(-m/2) = (1+K)/t * exp(-m/2 * log(R / (m t)^2)).
  const double log_pow = -0.5 * p.m * std::log(r / (mt * mt));
  const double base = (1.0 + p.K) / t;
  if (p.integer_m())
    return base * std::exp(log_pow + legendre_poly_log(p.m_as_int() - 1, z));
  return base * std::exp(log_pow) * legendre_fn(p.m - 1.0, z);
}

cplx ipow(cplx base, int n) {
  cplx acc(1.0, 0.0);
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

double ipow_d(double base, int n) {
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

struct FactorizedTransform {
  PolyCoeffs a;
  double frac_exp;                  // 0.5 - m, exponent shared by u2, u3
  int n;                            // m - 1
  std::vector<double> coef;         // coef[q] = (-1)^q C_q^n w^(n-2q) * C
};

FactorizedTransform make_factorized(const FtrParams& p) {
  FactorizedTransform t;
  t.a = poly_coeffs(p);
  const int m = p.m_as_int();
  t.n = m - 1;
  t.frac_exp = 0.5 - m;
  const double prefactor = std::pow(t.a.a2 * t.a.a3, 0.5 * m) /
                           ipow_d(2.0 * t.a.a4, m - 1);
  const double w = std::sqrt(t.a.a2 * t.a.a3) / t.a.a1;
  t.coef.resize(static_cast<std::size_t>(t.n / 2) + 1);
  for (int q = 0; q <= t.n / 2; ++q) {
    const double c =
        legendre_coefficient(t.n, q) * ipow_d(w, t.n - 2 * q) * prefactor;
    t.coef[static_cast<std::size_t>(q)] = (q % 2 == 0) ? c : -c;
  }
  return t;
}

// T(s) = M_gamma(-s) in the form (1/s) (1+a1/s)^(n-2q) (1+a2/s)^(q+1/2-m)
// (1+a3/s)^(q+1/2-m) (1+a4/s)^n summed over q. Off the real axis every
// base has strictly signed imaginary part, so principal powers follow the
// analytic branch; on the real axis (which tail-shifted evaluation can
// push left of 0, but never past the branch point at -a2) the two
// fractional factors are paired into a positive product.
cplx factorized_transform_at(const FactorizedTransform& t, cplx s) {
  if (s.imag() == 0.0) {
    const double w = s.real();
    const double inv = 1.0 / w;
    const double u1 = 1.0 + t.a.a1 * inv;
    const double u2 = 1.0 + t.a.a2 * inv;
    const double u3 = 1.0 + t.a.a3 * inv;
    const double u4 = 1.0 + t.a.a4 * inv;
    const double u23 = u2 * u3;
    double frac = std::pow(u23, t.frac_exp);
    // On w in (-a2, 0) both fractional bases are negative; continuing each
    // power through the upper half plane contributes exp(-i pi (1/2 - m))
    // twice, i.e. an overall -1 for integer m.
    if (u2 < 0.0 && u3 < 0.0) frac = -frac;
    double sum = 0.0, u23_q = 1.0;
    for (int q = 0; q <= t.n / 2; ++q) {
      sum += t.coef[static_cast<std::size_t>(q)] * ipow_d(u1, t.n - 2 * q) *
             u23_q;
      u23_q *= u23;
    }
    return cplx(inv * frac * ipow_d(u4, t.n) * sum, 0.0);
  }
  const cplx inv = 1.0 / s;
  const cplx u1 = 1.0 + t.a.a1 * inv;
  const cplx u2 = 1.0 + t.a.a2 * inv;
  const cplx u3 = 1.0 + t.a.a3 * inv;
  const cplx u4 = 1.0 + t.a.a4 * inv;
  const cplx frac = std::pow(u2, t.frac_exp) * std::pow(u3, t.frac_exp);
  const cplx u23 = u2 * u3;
  cplx sum(0.0, 0.0);
  cplx u23_q(1.0, 0.0);
  for (int q = 0; q <= t.n / 2; ++q) {
    sum += t.coef[static_cast<std::size_t>(q)] * ipow(u1, t.n - 2 * q) * u23_q;
    u23_q *= u23;
  }
  return inv * frac * ipow(u4, t.n) * sum;
}

void require_integer_m(const FtrParams& p, const char* op) {
  if (!p.integer_m())
    throw DomainError(std::string(op) + ": requires integer m");
}

double gm_kernel(int m, double x, double beta, double kc) {
  const double denom = kc + m;
  const double z = kc * beta * x / denom;
  double term = 1.0, sum = 1.0;
  for (int n = 1; n <= m - 1; ++n) {
    term *= z * static_cast<double>(m - n) / (static_cast<double>(n) * n);
    sum += term;
  }
  return ipow_d(m / denom, m) * beta * std::exp(-beta * x * m / denom) * sum;
}

double pochhammer(double a, int k) {
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= a + i;
  return acc;
}

double factorial(int k) {
  double acc = 1.0;
  for (int i = 2; i <= k; ++i) acc *= i;
  return acc;
}

double hm_kernel(int m, double x, double beta, double kc) {
  const double denom = m + kc;
  const double decay = std::exp(-beta * m * x / denom);
  double sum = 0.0;
  for (int n = 0; n <= m - 1; ++n) {
    for (int j = 0; j <= m - n - 1; ++j) {
      const double c = ipow_d(static_cast<double>(m), m - n - 1) *
                       ipow_d(kc, n + j) / ipow_d(denom, m - 1 + j);
      sum += c * ipow_d(beta, j) * pochhammer(m - n - j, n + j) /
             (factorial(n + j) * factorial(j)) * ipow_d(x, j);
    }
  }
  return decay * sum;
}

void validate_mixture(const FtrParams& p, const MixtureCoeffs& c) {
  if (c.M < 1 || c.alpha.size() != static_cast<std::size_t>(c.M) ||
      c.delta.size() != static_cast<std::size_t>(c.M))
    throw DomainError("MixtureCoeffs: inconsistent sizes");
  if (static_cast<double>(c.M) < std::ceil(p.K * p.Delta) + 0.5)
    throw DomainError("MixtureCoeffs: M must exceed ceil(K*Delta)");
}

}  // namespace

FtrParams::FtrParams(double k, double delta, double m_, double gamma_bar_)
    : K(k), Delta(delta), m(m_), gamma_bar(gamma_bar_) {
  validate();
}

void FtrParams::validate() const {
  if (!std::isfinite(K) || !std::isfinite(Delta) || !std::isfinite(m) ||
      !std::isfinite(gamma_bar))
    throw DomainError("FtrParams: parameters must be finite");
  if (K < 0.0) throw DomainError("FtrParams: K must be >= 0");
  if (Delta < 0.0 || Delta > 1.0)
    throw DomainError("FtrParams: Delta must lie in [0, 1]");
  if (!(m > 0.0)) throw DomainError("FtrParams: m must be > 0");
  if (!(gamma_bar > 0.0)) throw DomainError("FtrParams: gamma_bar must be > 0");
  if (K == 0.0 && Delta != 0.0)
    throw DomainError("FtrParams: Delta must be 0 when K is 0");
}

bool FtrParams::integer_m() const {
  return m >= 1.0 - kIntegerTol &&
         std::abs(m - std::round(m)) <= kIntegerTol * std::max(1.0, m);
}

int FtrParams::m_as_int() const {
  if (!integer_m()) throw DomainError("FtrParams: m is not a positive integer");
  return static_cast<int>(std::llround(m));
}

SpecularGeometry params_to_geometry(const FtrParams& p, double sigma) {
  p.validate();
  if (!(sigma > 0.0)) throw DomainError("params_to_geometry: sigma must be > 0");
  // V1, V2 are the roots of t^2 - S t + P with S = V1 + V2, P = V1 V2:
  //   V1^2 + V2^2 = 2 sigma^2 K,  V1 V2 = sigma^2 K Delta.
  const double sum_sq = 2.0 * sigma * sigma * p.K;
  const double s = std::sqrt(sum_sq * (1.0 + p.Delta));
  const double d = std::sqrt(sum_sq * (1.0 - p.Delta));
  return SpecularGeometry{0.5 * (s + d), 0.5 * (s - d), sigma};
}

PowerRatios geometry_to_params(const SpecularGeometry& g) {
  if (!(g.sigma > 0.0) || g.V1 < 0.0 || g.V2 < 0.0)
    throw DomainError("geometry_to_params: need V1, V2 >= 0 and sigma > 0");
  const double power = g.V1 * g.V1 + g.V2 * g.V2;
  const double k = power / (2.0 * g.sigma * g.sigma);
  const double delta = power > 0.0 ? 2.0 * g.V1 * g.V2 / power : 0.0;
  return PowerRatios{k, delta};
}

double mgf(const FtrParams& p, double s) {
  p.validate();
  if (s > 0.0) throw DomainError("mgf: defined on s <= 0");
  return mgf_formula(p, s);
}

double mgf_derivative_mean(const FtrParams& p) {
  p.validate();
  // Central differences with one Richardson step; the MGF formula is
  // analytic in a neighbourhood of 0, so the small positive abscissae are
  // legitimate evaluation points.
  const double h = 0.005 / p.gamma_bar;
  auto central = [&](double step) {
    return (mgf_formula(p, step) - mgf_formula(p, -step)) / (2.0 * step);
  };
  const double d1 = central(h);
  const double d2 = central(0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

PolyCoeffs poly_coeffs(const FtrParams& p) {
  p.validate();
  require_integer_m(p, "poly_coeffs");
  const double num = p.m * (1.0 + p.K);
  return PolyCoeffs{
      num / ((p.m + p.K) * p.gamma_bar),
      num / ((p.m + p.K * (1.0 + p.Delta)) * p.gamma_bar),
      num / ((p.m + p.K * (1.0 - p.Delta)) * p.gamma_bar),
      (1.0 + p.K) / p.gamma_bar};
}

LaplaceTransform pdf_laplace_transform(const FtrParams& p) {
  p.validate();
  require_integer_m(p, "pdf_laplace_transform");
  const FactorizedTransform t = make_factorized(p);
  return [t](cplx s) { return factorized_transform_at(t, s); };
}

double pdf_exact(const FtrParams& p, double x, const LaplaceInversion& cfg) {
  p.validate();
  require_integer_m(p, "pdf_exact");
  if (x < 0.0) throw DomainError("pdf_exact: x must be >= 0");
  const FactorizedTransform t = make_factorized(p);
  if (x == 0.0) {
    // Initial value theorem: f(0+) = lim s T(s) = sum of the q coefficients.
    double f0 = 0.0;
    for (double c : t.coef) f0 += c;
    return std::max(f0, 0.0);
  }
  // Shift the contour onto the slowest pole: inverting T(s - a2) and
  // multiplying by exp(-a2 x) keeps the inversion's working scale at the
  // local density scale, preserving relative accuracy deep in the tail.
  // The shifted original grows polynomially, so the Euler discretization
  // parameter is raised to keep aliasing below 1e-9.
  const double shift = t.a.a2;
  LaplaceInversion local = cfg;
  local.euler_a = std::max(cfg.euler_a, 32.0);
  auto transform = [&t, shift](cplx s) {
    return factorized_transform_at(t, s - shift);
  };
  const double value =
      std::exp(-shift * x) * inverse_laplace(transform, x, local).value;
  return (value < 0.0 && value > -1e-10) ? 0.0 : value;
}

double cdf_exact(const FtrParams& p, double x, const LaplaceInversion& cfg) {
  p.validate();
  require_integer_m(p, "cdf_exact");
  if (x < 0.0) throw DomainError("cdf_exact: x must be >= 0");
  if (x == 0.0) return 0.0;
  const FactorizedTransform t = make_factorized(p);
  auto transform = [&t](cplx s) { return factorized_transform_at(t, s) / s; };
  const double value = inverse_laplace(transform, x, cfg).value;
  return (value < 0.0 && value > -1e-10) ? 0.0 : value;
}

double pdf_approx(const FtrParams& p, double x, const MixtureCoeffs& c) {
  p.validate();
  require_integer_m(p, "pdf_approx");
  validate_mixture(p, c);
  if (x < 0.0) throw DomainError("pdf_approx: x must be >= 0");
  const int m = p.m_as_int();
  const double beta = (p.K + 1.0) / p.gamma_bar;
  double sum = 0.0;
  for (int i = 0; i < c.M; ++i) {
    const double lo = p.K * (1.0 - c.delta[static_cast<std::size_t>(i)]);
    const double hi = p.K * (1.0 + c.delta[static_cast<std::size_t>(i)]);
    sum += 0.5 * c.alpha[static_cast<std::size_t>(i)] *
           (gm_kernel(m, x, beta, lo) + gm_kernel(m, x, beta, hi));
  }
  return sum;
}

double cdf_approx(const FtrParams& p, double x, const MixtureCoeffs& c) {
  p.validate();
  require_integer_m(p, "cdf_approx");
  validate_mixture(p, c);
  if (x < 0.0) throw DomainError("cdf_approx: x must be >= 0");
  const int m = p.m_as_int();
  const double beta = (p.K + 1.0) / p.gamma_bar;
  double sum = 0.0;
  for (int i = 0; i < c.M; ++i) {
    const double lo = p.K * (1.0 - c.delta[static_cast<std::size_t>(i)]);
    const double hi = p.K * (1.0 + c.delta[static_cast<std::size_t>(i)]);
    sum += 0.5 * c.alpha[static_cast<std::size_t>(i)] *
           (hm_kernel(m, x, beta, lo) + hm_kernel(m, x, beta, hi));
  }
  return 1.0 - sum;
}

double envelope_pdf(const FtrParams& p, double r, double omega,
                    const LaplaceInversion& cfg) {
  if (r < 0.0) throw DomainError("envelope_pdf: r must be >= 0");
  if (!(omega > 0.0)) throw DomainError("envelope_pdf: omega must be > 0");
  if (r == 0.0) return 0.0;
  return 2.0 * r * pdf_exact(p.with_gamma_bar(omega), r * r, cfg);
}

double envelope_pdf_approx(const FtrParams& p, double r, double omega,
                           const MixtureCoeffs& c) {
  if (r < 0.0) throw DomainError("envelope_pdf_approx: r must be >= 0");
  if (!(omega > 0.0))
    throw DomainError("envelope_pdf_approx: omega must be > 0");
  return 2.0 * r * pdf_approx(p.with_gamma_bar(omega), r * r, c);
}

double envelope_cdf(const FtrParams& p, double r, double omega,
                    const LaplaceInversion& cfg) {
  if (r < 0.0) throw DomainError("envelope_cdf: r must be >= 0");
  if (!(omega > 0.0)) throw DomainError("envelope_cdf: omega must be > 0");
  return cdf_exact(p.with_gamma_bar(omega), r * r, cfg);
}

double hoyt_q(const FtrParams& p) {
  p.validate();
  if (!near(p.m, 1.0, kIntegerTol))
    throw DomainError("hoyt_q: defined for m = 1");
  return std::sqrt((1.0 + p.K * (1.0 - p.Delta)) /
                   (1.0 + p.K * (1.0 + p.Delta)));
}

double rayleigh_mgf(double gamma_bar, double s) {
  return 1.0 / (1.0 - gamma_bar * s);
}

double hoyt_mgf(double q, double gamma_bar, double s) {
  const double q2 = q * q;
  const double gs = gamma_bar * s;
  const double c = 4.0 * q2 / ((1.0 + q2) * (1.0 + q2));
  return 1.0 / std::sqrt(c * gs * gs - 2.0 * gs + 1.0);
}

double nakagami_mgf(double m, double gamma_bar, double s) {
  return std::exp(-m * std::log1p(-gamma_bar * s / m));
}

double rician_mgf(double k, double gamma_bar, double s) {
  const double denom = 1.0 + k - gamma_bar * s;
  return (1.0 + k) / denom * std::exp(k * gamma_bar * s / denom);
}

double rician_shadowed_mgf(double k, double m, double gamma_bar, double s) {
  const double denom = 1.0 + k - gamma_bar * s;
  const double g = gamma_bar * s / denom;
  return (1.0 + k) / denom * std::exp(-m * std::log1p(-k * g / m));
}

double twdp_mgf(double k, double delta, double gamma_bar, double s) {
  const double denom = 1.0 + k - gamma_bar * s;
  const double a = k * gamma_bar * s / denom;  // <= 0 for s <= 0
  return (1.0 + k) / denom * std::exp(a + std::abs(delta * a)) *
         bessel_i0_scaled(delta * a);
}

double two_wave_mgf(double delta, double gamma_bar, double s) {
  const double gs = gamma_bar * s;
  return std::exp(gs + std::abs(delta * gs)) * bessel_i0_scaled(delta * gs);
}

double fluctuating_two_wave_mgf(double delta, double m, double gamma_bar,
                                double s) {
  auto integrand = [&](double theta) {
    const double inst = gamma_bar * s * (1.0 + delta * std::cos(theta));
    return std::exp(-m * std::log1p(-inst / m));
  };
  Quadrature quad;
  quad.abs_tol = 1e-13;
  quad.rel_tol = 1e-12;
  return integrate(integrand, 0.0, M_PI, quad).value / M_PI;
}

ReduceResult reduce(const FtrParams& p, ReduceTarget target) {
  p.validate();
  const double gb = p.gamma_bar;
  const bool delta0 = near(p.Delta, 0.0);
  const bool big_k = p.K >= kSurrogateK;
  const bool big_m = p.m >= kSurrogateM;
  constexpr double kFinite = 1e-9;
  constexpr double kLimit = 1e-3;

  switch (target) {
    case ReduceTarget::kRayleigh:
      if (delta0 && p.K == 0.0)
        return {[gb](double s) { return rayleigh_mgf(gb, s); }, kFinite};
      if (delta0 && big_k && near(p.m, 1.0, kIntegerTol))
        return {[gb](double s) { return rayleigh_mgf(gb, s); }, kLimit};
      break;
    case ReduceTarget::kOneSidedGaussian:
      if (big_k && ((delta0 && near(p.m, 0.5, kIntegerTol)) ||
                    (near(p.Delta, 1.0) && near(p.m, 1.0, kIntegerTol))))
        return {[gb](double s) { return nakagami_mgf(0.5, gb, s); }, kLimit};
      break;
    case ReduceTarget::kHoyt: {
      if (near(p.m, 1.0, kIntegerTol)) {
        const double q = hoyt_q(p);
        return {[q, gb](double s) { return hoyt_mgf(q, gb, s); }, kFinite};
      }
      if (delta0 && near(p.m, 0.5, kIntegerTol)) {
        // K = (1-q^2)/(2q^2)  <=>  q = 1/sqrt(1+2K).
        const double q = 1.0 / std::sqrt(1.0 + 2.0 * p.K);
        return {[q, gb](double s) { return hoyt_mgf(q, gb, s); }, kFinite};
      }
      break;
    }
    case ReduceTarget::kNakagamiM:
      if (delta0 && big_k) {
        const double m = p.m;
        return {[m, gb](double s) { return nakagami_mgf(m, gb, s); }, kLimit};
      }
      break;
    case ReduceTarget::kRician:
      if (delta0 && big_m && !big_k) {
        const double k = p.K;
        return {[k, gb](double s) { return rician_mgf(k, gb, s); }, kLimit};
      }
      break;
    case ReduceTarget::kRicianShadowed:
      if (delta0 && !big_k && !big_m) {
        const double k = p.K, m = p.m;
        return {
            [k, m, gb](double s) { return rician_shadowed_mgf(k, m, gb, s); },
            kFinite};
      }
      break;
    case ReduceTarget::kTwdp:
      if (big_m && !big_k) {
        const double k = p.K, d = p.Delta;
        return {[k, d, gb](double s) { return twdp_mgf(k, d, gb, s); },
                kLimit};
      }
      break;
    case ReduceTarget::kTwoWave:
      if (big_k && big_m) {
        const double d = p.Delta;
        return {[d, gb](double s) { return two_wave_mgf(d, gb, s); }, kLimit};
      }
      break;
    case ReduceTarget::kFluctuatingTwoWave:
      if (big_k && !big_m) {
        const double d = p.Delta, m = p.m;
        return {[d, m, gb](double s) {
                  return fluctuating_two_wave_mgf(d, m, gb, s);
                },
                kLimit};
      }
      break;
  }
  throw DomainError("reduce: parameters do not lie in the requested cell");
}

double mgf_independent(const FtrParams& p, double s) {
  p.validate();
  if (s > 0.0) throw DomainError("mgf_independent: defined on s <= 0");
  if (s == 0.0) return 1.0;
  const double denom = 1.0 + p.K - p.gamma_bar * s;
  const double g = p.gamma_bar * s / denom;
  const double kd = p.K * p.Delta;
  const double d =
      1.0 - p.K * g / p.m + kd * kd * g * g / (4.0 * p.m * p.m);
  const double arg = kd * kd * g * g / (4.0 * p.m * p.m * d);
  if (!(arg >= 0.0 && arg < 1.0))
    throw DomainError("mgf_independent: 2F1 argument outside [0, 1)");
  return (1.0 + p.K) / denom * std::exp(-p.m * std::log(d)) *
         gauss_2f1(p.m, p.m, 1.0, arg);
}

}  // namespace ftr
