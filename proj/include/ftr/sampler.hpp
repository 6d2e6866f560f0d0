// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0
//
// Seeded Monte Carlo generation of FTR channel realizations. Every sample
// owns a counter-based random stream keyed by (seed, sample index), so
// batches are bit-identical for a given configuration regardless of how the
// index range is partitioned across threads.

#ifndef FTR_SAMPLER_HPP_
#define FTR_SAMPLER_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ftr/model.hpp"

namespace ftr {

struct SampleConfig {
  std::uint64_t seed = 0;
  std::int64_t n_samples = 1;
  /// Extra linear symbol-energy-to-noise scaling applied to the SNR column.
  /// At the default of 1 the sample mean of the SNR equals gamma_bar.
  double es_over_n0 = 1.0;

  void validate() const;
};

struct SampleBatch {
  /// Linear SNR per realization.
  std::vector<double> snr;
  /// Received envelope |V_r| in volts, with the diffuse component fixed at
  /// sigma = 1/sqrt(2), so E[envelope^2] = 1 + K.
  std::vector<double> envelope;
};

/// Realizations of the FTR model: both specular components share one
/// Gamma-distributed power fluctuation.
SampleBatch sample_ftr(const FtrParams& p, const SampleConfig& cfg);

/// Variant with i.i.d. fluctuations on the two specular components.
SampleBatch sample_independent(const FtrParams& p, const SampleConfig& cfg);

struct MgfEstimate {
  double estimate;
  double std_error;
};

/// Sample mean and standard error of e^{s * snr} for s <= 0.
MgfEstimate empirical_mgf(const SampleBatch& batch, double s);

/// CSV export: header "snr,envelope", one row per realization, 17
/// significant digits, LF line endings.
void write_csv(const SampleBatch& batch, std::ostream& os);

/// Columnar binary dump: 8-byte magic "FTRBIN01", little-endian uint64 n
/// and seed, then n SNR doubles followed by n envelope doubles.
void write_binary(const SampleBatch& batch, std::uint64_t seed,
                  std::ostream& os);

/// Reads the binary dump back; returns the stored seed through *seed when
/// non-null. Throws DomainError on a malformed header.
SampleBatch read_binary(std::istream& is, std::uint64_t* seed = nullptr);

}  // namespace ftr

#endif  // FTR_SAMPLER_HPP_
