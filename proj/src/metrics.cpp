// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#include "ftr/metrics.hpp"

#include <array>
#include <cmath>

#include "ftr/errors.hpp"
#include "ftr/sampler.hpp"
#include "ftr/specfn.hpp"

namespace ftr {
namespace {

double cep_at(const CepFamily& cep, double x) {
  double acc = 0.0;
  for (const auto& [alpha, beta] : cep.terms)
    acc += alpha * gauss_q(std::sqrt(beta * x));
  return acc;
}

/// Shared prefactor of the asymptotic expressions:
/// m^m (1+K) P_{m-1}((m+K)/sqrt((m+K)^2 - D^2 K^2)) / sqrt(...)^m.
double asymptote_scale(const FtrParams& p) {
  const double mk = p.m + p.K;
  const double dk = p.Delta * p.K;
  const double root = std::sqrt(mk * mk - dk * dk);
  const int m = p.m_as_int();
  const double legendre = legendre_poly(m - 1, mk / root);
  return std::pow(p.m / root, p.m) * (1.0 + p.K) * legendre;
}

McEstimate mean_with_error(const std::vector<double>& values) {
  const std::size_t n = values.size();
  long double sum = 0.0L, sum_sq = 0.0L;
  for (double v : values) {
    sum += v;
    sum_sq += static_cast<long double>(v) * v;
  }
  const double mean = static_cast<double>(sum / n);
  const double var =
      static_cast<double>((sum_sq - sum * sum / static_cast<long double>(n)) /
                          (static_cast<long double>(n) - 1.0L));
  return {mean, std::sqrt(std::max(var, 0.0) / static_cast<double>(n))};
}

}  // namespace

void CepFamily::validate() const {
  if (terms.empty()) throw DomainError("CepFamily: needs at least one term");
  for (const auto& [alpha, beta] : terms)
    if (!(alpha > 0.0) || !(beta > 0.0))
      throw DomainError("CepFamily: alpha_r and beta_r must be > 0");
}

void OutageSpec::validate() const {
  if (!(rate_threshold > 0.0))
    throw DomainError("OutageSpec: rate_threshold must be > 0");
}

double gauss_q(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double ber_exact(const FtrParams& p, const CepFamily& cep,
                 const Quadrature& quad) {
  p.validate();
  cep.validate();
  const int m = p.m_as_int();
  const PolyCoeffs a = poly_coeffs(p);
  const double mk = p.m + p.K;
  const double dk = p.Delta * p.K;
  const double root = std::sqrt(mk * mk - dk * dk);
  const double prefactor = std::ldexp(1.0, -(m - 1)) * (1.0 + p.K) /
                           p.gamma_bar * std::pow(p.m / root, p.m);

  double sum = 0.0;
  for (int q = 0; q <= (m - 1) / 2; ++q) {
    const std::array<double, 4> b = {1.0 + 2.0 * q - p.m, p.m - q - 0.5,
                                     p.m - q - 0.5, 1.0 - p.m};
    double inner = 0.0;
    for (const auto& [alpha_r, beta_r] : cep.terms) {
      const std::array<double, 4> x = {
          -2.0 * a.a1 / beta_r, -2.0 * a.a2 / beta_r, -2.0 * a.a3 / beta_r,
          -2.0 * a.a4 / beta_r};
      inner += alpha_r / (2.0 * beta_r) * lauricella_fd4(1.5, b, 2.0, x, quad);
    }
    const double term = legendre_coefficient(m - 1, q) *
                        std::pow(mk / root, m - 1 - 2 * q) * inner;
    sum += (q % 2 == 0) ? term : -term;
  }
  return prefactor * sum;
}

double ber_quadrature(const FtrParams& p, const CepFamily& cep,
                      const Quadrature& quad, const LaplaceInversion& inv) {
  p.validate();
  cep.validate();
  p.m_as_int();
  // The integrand needs absolute accuracy; deep in the tail the inversion's
  // relative estimate is meaningless, so the convergence gate is disabled
  // and the quadrature tolerance governs instead.
  LaplaceInversion loose = inv;
  loose.target_rel_error = 1.0;
  auto integrand = [&](double x) {
    return cep_at(cep, x) * pdf_exact(p, x, loose);
  };
  return integrate_to_inf(integrand, 0.0, quad).value;
}

double ber_asymptotic(const FtrParams& p, const CepFamily& cep) {
  p.validate();
  cep.validate();
  double ratio_sum = 0.0;
  for (const auto& [alpha, beta] : cep.terms) ratio_sum += alpha / beta;
  return 0.5 * asymptote_scale(p) * ratio_sum / p.gamma_bar;
}

double outage_probability(const FtrParams& p, const OutageSpec& spec,
                          const LaplaceInversion& inv) {
  p.validate();
  spec.validate();
  return cdf_exact(p, std::exp2(spec.rate_threshold) - 1.0, inv);
}

double outage_asymptotic(const FtrParams& p, const OutageSpec& spec) {
  p.validate();
  spec.validate();
  return asymptote_scale(p) * (std::exp2(spec.rate_threshold) - 1.0) /
         p.gamma_bar;
}

McEstimate ber_mc(const FtrParams& p, const CepFamily& cep, std::int64_t n,
                  std::uint64_t seed) {
  cep.validate();
  SampleConfig cfg;
  cfg.seed = seed;
  cfg.n_samples = n;
  const SampleBatch batch = sample_ftr(p, cfg);
  std::vector<double> cond(batch.snr.size());
  for (std::size_t i = 0; i < batch.snr.size(); ++i)
    cond[i] = cep_at(cep, batch.snr[i]);
  return mean_with_error(cond);
}

McEstimate outage_mc(const FtrParams& p, const OutageSpec& spec,
                     std::int64_t n, std::uint64_t seed) {
  spec.validate();
  SampleConfig cfg;
  cfg.seed = seed;
  cfg.n_samples = n;
  const SampleBatch batch = sample_ftr(p, cfg);
  const double threshold = std::exp2(spec.rate_threshold) - 1.0;
  std::int64_t hits = 0;
  for (double v : batch.snr)
    if (v < threshold) ++hits;
  const double frac = static_cast<double>(hits) / static_cast<double>(n);
  return {frac, std::sqrt(frac * (1.0 - frac) / static_cast<double>(n))};
}

std::vector<McEstimate> ber_mc_sweep(const FtrParams& p, const CepFamily& cep,
                                     const std::vector<double>& gamma_bar_db,
                                     std::int64_t n, std::uint64_t seed) {
  cep.validate();
  SampleConfig cfg;
  cfg.seed = seed;
  cfg.n_samples = n;
  // SNR scales linearly with gamma_bar, so a unit-mean batch serves the
  // whole grid.
  const SampleBatch batch = sample_ftr(p.with_gamma_bar(1.0), cfg);
  std::vector<McEstimate> out;
  out.reserve(gamma_bar_db.size());
  std::vector<double> cond(batch.snr.size());
  for (double db : gamma_bar_db) {
    const double gb = db_to_linear(db);
    for (std::size_t i = 0; i < batch.snr.size(); ++i)
      cond[i] = cep_at(cep, gb * batch.snr[i]);
    out.push_back(mean_with_error(cond));
  }
  return out;
}

std::vector<McEstimate> outage_mc_sweep(const FtrParams& p,
                                        const OutageSpec& spec,
                                        const std::vector<double>& gamma_bar_db,
                                        std::int64_t n, std::uint64_t seed) {
  spec.validate();
  SampleConfig cfg;
  cfg.seed = seed;
  cfg.n_samples = n;
  const SampleBatch batch = sample_ftr(p.with_gamma_bar(1.0), cfg);
  const double threshold = std::exp2(spec.rate_threshold) - 1.0;
  std::vector<McEstimate> out;
  out.reserve(gamma_bar_db.size());
  for (double db : gamma_bar_db) {
    const double scaled = threshold / db_to_linear(db);
    std::int64_t hits = 0;
    for (double v : batch.snr)
      if (v < scaled) ++hits;
    const double frac = static_cast<double>(hits) / static_cast<double>(n);
    out.push_back(
        {frac, std::sqrt(frac * (1.0 - frac) / static_cast<double>(n))});
  }
  return out;
}

}  // namespace ftr
