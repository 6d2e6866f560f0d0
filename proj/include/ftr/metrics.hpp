// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0
//
// Link performance metrics over FTR fading: exact average BER for the
// coherent-modulation CEP family through the Lauricella representation (and
// an independent direct-quadrature route), high-SNR asymptotes, and outage
// capacity probability, plus the seeded Monte Carlo companions used to
// cross-check all of them.

#ifndef FTR_METRICS_HPP_
#define FTR_METRICS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "ftr/laplace.hpp"
#include "ftr/model.hpp"
#include "ftr/quadrature.hpp"

namespace ftr {

/// Conditional error probability sum_r alpha_r Q(sqrt(beta_r x)).
struct CepFamily {
  std::vector<std::pair<double, double>> terms;  // (alpha_r, beta_r)

  static CepFamily bpsk() { return CepFamily{{{1.0, 2.0}}}; }
  void validate() const;
};

struct OutageSpec {
  /// Rate threshold R_S in bits/s/Hz; outage compares against 2^R_S - 1.
  double rate_threshold;

  void validate() const;
};

/// Gauss Q-function Q(x) = P(N(0,1) > x).
double gauss_q(double x);

double db_to_linear(double db);
double linear_to_db(double linear);

/// Exact average error probability via the Lauricella-function expression
/// (integer m). The default evaluation path.
double ber_exact(const FtrParams& p, const CepFamily& cep,
                 const Quadrature& quad = {});

/// Same quantity by direct integration of the CEP against the exact
/// (inversion-based) density; serves as the independent oracle for
/// ber_exact.
double ber_quadrature(const FtrParams& p, const CepFamily& cep,
                      const Quadrature& quad = {},
                      const LaplaceInversion& inv = {});

/// High-SNR asymptote of the average error probability; decays as
/// 1/gamma_bar.
double ber_asymptotic(const FtrParams& p, const CepFamily& cep);

/// P(log2(1+gamma) < R_S) = F_gamma(2^R_S - 1).
double outage_probability(const FtrParams& p, const OutageSpec& spec,
                          const LaplaceInversion& inv = {});

/// High-SNR outage asymptote, proportional to (2^R_S - 1)/gamma_bar.
double outage_asymptotic(const FtrParams& p, const OutageSpec& spec);

struct McEstimate {
  double estimate;
  double std_error;
};

/// Semi-analytic Monte Carlo BER: averages the exact conditional error
/// probability over sampled channel SNRs.
McEstimate ber_mc(const FtrParams& p, const CepFamily& cep, std::int64_t n,
                  std::uint64_t seed);

/// Outage probability by exceedance counting over sampled SNRs.
McEstimate outage_mc(const FtrParams& p, const OutageSpec& spec,
                     std::int64_t n, std::uint64_t seed);

/// Sweep versions sharing one unit-mean channel batch across the dB grid
/// (the SNR enters linearly, so one draw serves every grid point).
std::vector<McEstimate> ber_mc_sweep(const FtrParams& p, const CepFamily& cep,
                                     const std::vector<double>& gamma_bar_db,
                                     std::int64_t n, std::uint64_t seed);
std::vector<McEstimate> outage_mc_sweep(const FtrParams& p,
                                        const OutageSpec& spec,
                                        const std::vector<double>& gamma_bar_db,
                                        std::int64_t n, std::uint64_t seed);

}  // namespace ftr

#endif  // FTR_METRICS_HPP_
