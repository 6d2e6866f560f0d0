// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0
//
// Core statistics of the fluctuating two-ray (FTR) fading model: parameter
// validation, the closed-form MGF of the received SNR, exact PDF/CDF for
// integer fluctuation index via numerical inversion of the factorized MGF,
// finite mixture approximations, special-case reductions, and the MGF of
// the independent-fluctuation variant.

#ifndef FTR_MODEL_HPP_
#define FTR_MODEL_HPP_

#include <complex>
#include <functional>
#include <vector>

#include "ftr/laplace.hpp"

namespace ftr {

/// The model quadruple (K, Delta, m, gamma_bar).
///   K        >= 0   specular-to-diffuse power ratio (linear)
///   Delta    [0, 1] similarity of the two specular amplitudes
///   m        > 0    fluctuation index of the common Gamma modulation
///   gamma_bar > 0   average SNR (linear); plays the role of the mean
///                   squared envelope when used in the envelope domain
/// Delta must be 0 when K is 0 (no specular power to compare).
struct FtrParams {
  double K = 0.0;
  double Delta = 0.0;
  double m = 1.0;
  double gamma_bar = 1.0;

  FtrParams() = default;
  FtrParams(double k, double delta, double m_, double gamma_bar_);

  void validate() const;
  /// True when m is a positive integer (within 1e-9), as required by the
  /// exact PDF/CDF and mixture paths.
  bool integer_m() const;
  int m_as_int() const;

  FtrParams with_gamma_bar(double g) const {
    return FtrParams(K, Delta, m, g);
  }
};

/// Physical amplitudes behind (K, Delta): specular amplitudes V1 >= V2 and
/// per-dimension diffuse standard deviation sigma.
struct SpecularGeometry {
  double V1 = 0.0;
  double V2 = 0.0;
  double sigma = 1.0;
};

/// Inverse-time constants of the factorized MGF polynomial. For Delta in
/// [0, 1]: a2 <= a1 <= a3 <= a4, all positive.
struct PolyCoeffs {
  double a1, a2, a3, a4;
};

/// Coefficients of the 2M-component mixture approximation.
struct MixtureCoeffs {
  int M = 0;
  std::vector<double> alpha;
  std::vector<double> delta;
  /// |sum(alpha) - 1| evaluated in the exact rational arithmetic before
  /// rounding the weights to double; 0 unless something is badly wrong.
  double alpha_sum_error = 0.0;
  /// Set when M > 25: the alternating exact coefficients grow large enough
  /// that the mixture sum itself loses digits in double arithmetic.
  bool precision_warning = false;
};

/// Solves V1^2 + V2^2 = 2 sigma^2 K and V1 V2 = sigma^2 K Delta with the
/// canonical ordering V1 >= V2.
SpecularGeometry params_to_geometry(const FtrParams& p, double sigma);

/// Recovers (K, Delta) from amplitudes; Delta is 0 when both specular
/// amplitudes vanish.
struct PowerRatios {
  double K;
  double Delta;
};
PowerRatios geometry_to_params(const SpecularGeometry& g);

/// Closed-form MGF of the SNR, valid on the real axis s <= 0 for any m > 0.
/// Integer m evaluates the Legendre polynomial; non-integer m goes through
/// the Legendre-function series and may throw DomainError if the induced
/// argument leaves its convergence region.
double mgf(const FtrParams& p, double s);

/// E[SNR] recovered by one-sided finite differences of the MGF at 0; equals
/// gamma_bar up to the differentiation error (about 1e-9 relative).
double mgf_derivative_mean(const FtrParams& p);

/// The four pole parameters of the factorized transform (integer m).
PolyCoeffs poly_coeffs(const FtrParams& p);

/// MGF of the independent-fluctuation variant, where the two specular
/// components carry i.i.d. Gamma fluctuations (any m > 0, s <= 0).
double mgf_independent(const FtrParams& p, double s);

/// Laplace transform whose inversion at x yields the SNR PDF: the
/// factorized MGF evaluated at -s, branch-safe for complex s right of the
/// singularities (integer m).
LaplaceTransform pdf_laplace_transform(const FtrParams& p);

/// Exact SNR density at x >= 0 for integer m, by numerical inversion of
/// the factorized transform. x = 0 uses the initial value theorem.
double pdf_exact(const FtrParams& p, double x,
                 const LaplaceInversion& cfg = {});

/// Exact SNR distribution function at x >= 0 for integer m.
double cdf_exact(const FtrParams& p, double x,
                 const LaplaceInversion& cfg = {});

/// Exact mixture coefficients (alpha_i, delta_i) for a given order
/// M > ceil(K * Delta). alpha_i come from an exact rational-arithmetic
/// expansion of the defining polynomial integral, so sum(alpha) = 1 holds
/// to rounding.
MixtureCoeffs mixture_coeffs(const FtrParams& p, int M);

/// Mixture approximation of the SNR density (integer m).
double pdf_approx(const FtrParams& p, double x, const MixtureCoeffs& c);

/// Mixture approximation of the SNR distribution function (integer m).
double cdf_approx(const FtrParams& p, double x, const MixtureCoeffs& c);

/// Signal envelope density f_r(r) = 2 r f_gamma(r^2) with the mean square
/// envelope omega in place of gamma_bar.
double envelope_pdf(const FtrParams& p, double r, double omega,
                    const LaplaceInversion& cfg = {});
double envelope_pdf_approx(const FtrParams& p, double r, double omega,
                           const MixtureCoeffs& c);

/// Envelope distribution function F_r(r) = F_gamma(r^2) under omega.
double envelope_cdf(const FtrParams& p, double r, double omega,
                    const LaplaceInversion& cfg = {});

/// Hoyt (Nakagami-q) parameter of the m = 1 special case,
/// q = sqrt((1 + K(1-Delta)) / (1 + K(1+Delta))).
double hoyt_q(const FtrParams& p);

// Closed-form reference MGFs of the classical models the FTR model
// reduces to. All take s <= 0.
double rayleigh_mgf(double gamma_bar, double s);
double hoyt_mgf(double q, double gamma_bar, double s);
double nakagami_mgf(double m, double gamma_bar, double s);
double rician_mgf(double k, double gamma_bar, double s);
double rician_shadowed_mgf(double k, double m, double gamma_bar, double s);
double twdp_mgf(double k, double delta, double gamma_bar, double s);
double two_wave_mgf(double delta, double gamma_bar, double s);
/// Fluctuating two-wave (no diffuse component): phase average of the
/// Nakagami MGF, evaluated by quadrature.
double fluctuating_two_wave_mgf(double delta, double m, double gamma_bar,
                                double s);

enum class ReduceTarget {
  kRayleigh,
  kRician,
  kRicianShadowed,
  kHoyt,
  kNakagamiM,
  kTwdp,
  kOneSidedGaussian,
  kTwoWave,
  kFluctuatingTwoWave,
};

struct ReduceResult {
  /// Independent closed-form MGF of the target model for s <= 0.
  std::function<double(double)> mgf;
  /// Expected agreement with the FTR MGF: 1e-9 for rows reached at finite
  /// parameters, 1e-3 for rows reached through the documented limit
  /// surrogates (K = 1e6, m = 1e4).
  double tolerance;
};

/// Maps p onto a special-case row and returns that model's reference MGF
/// for comparison testing. Limiting rows accept surrogate values K >= 1e5
/// and m >= 1e3. Throws DomainError when p does not lie in (or limit to)
/// the requested cell.
ReduceResult reduce(const FtrParams& p, ReduceTarget target);

}  // namespace ftr

#endif  // FTR_MODEL_HPP_
