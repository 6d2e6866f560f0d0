// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#include "ftr/sampler.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

#include "ftr/errors.hpp"
#include "ftr/parallel.hpp"

namespace ftr {
namespace {

// Philox4x32-10 (Salmon et al., SC'11). Counter layout per generated block:
// (block, sample_lo, sample_hi, stream_tag); key = split seed.
struct Philox {
  std::array<std::uint32_t, 4> counter;
  std::array<std::uint32_t, 2> key;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> k) {
    constexpr std::uint32_t kM0 = 0xD2511F53u;
    constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u;
    constexpr std::uint32_t kW1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ k[0], lo1, hi0 ^ ctr[3] ^ k[1], lo0};
      k[0] += kW0;
      k[1] += kW1;
    }
    return ctr;
  }
};

// Per-sample stream of uniforms/normals with a fixed draw order.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t sample_index,
               std::uint32_t stream_tag)
      : ctr_{0, static_cast<std::uint32_t>(sample_index),
             static_cast<std::uint32_t>(sample_index >> 32), stream_tag},
        key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)} {}

  std::uint64_t next_u64() {
    if (have_ == 0) {
      buffer_ = Philox::block(ctr_, key_);
      ++ctr_[0];
      have_ = 2;
    }
    const int idx = 2 * (2 - have_);
    --have_;
    return (static_cast<std::uint64_t>(buffer_[static_cast<std::size_t>(idx)])
            << 32) |
           buffer_[static_cast<std::size_t>(idx + 1)];
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return std::ldexp(static_cast<double>(next_u64() >> 11), -53); }

  /// Uniform on (0, 1]; safe as a log argument.
  double uniform_pos() {
    return std::ldexp(static_cast<double>((next_u64() >> 11) + 1), -53);
  }

  /// Standard normal via Box-Muller; the spare is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double angle = 2.0 * M_PI * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> buffer_{};
  int have_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Unit-mean Gamma variate with shape m (Marsaglia-Tsang, with the
/// power-of-uniform boost for shape < 1).
double gamma_unit_mean(SampleStream& rng, double shape) {
  double boost = 1.0;
  double a = shape;
  if (a < 1.0) {
    boost = std::pow(rng.uniform_pos(), 1.0 / a);
    a += 1.0;
  }
  const double d = a - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_pos();
    if (u < 1.0 - 0.0331 * x * x * x * x) return boost * d * v / shape;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return boost * d * v / shape;
  }
}

constexpr std::uint32_t kStreamShared = 0;
constexpr std::uint32_t kStreamIndependent = 1;
constexpr double kSigma = M_SQRT1_2;  // diffuse std-dev per dimension

SampleBatch sample_impl(const FtrParams& p, const SampleConfig& cfg,
                        bool independent) {
  p.validate();
  cfg.validate();
  const SpecularGeometry geo = params_to_geometry(p, kSigma);
  // Eq. mean scaling: E[|V_r|^2] = 2 sigma^2 (1 + K) = 1 + K here, so this
  // factor makes E[snr] = es_over_n0 * gamma_bar.
  const double snr_scale = cfg.es_over_n0 * p.gamma_bar / (1.0 + p.K);
  const std::uint32_t tag = independent ? kStreamIndependent : kStreamShared;

  SampleBatch batch;
  batch.snr.resize(static_cast<std::size_t>(cfg.n_samples));
  batch.envelope.resize(static_cast<std::size_t>(cfg.n_samples));

  parallel_chunks(cfg.n_samples, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      SampleStream rng(cfg.seed, static_cast<std::uint64_t>(i), tag);
      double amp1, amp2;
      if (independent) {
        amp1 = std::sqrt(gamma_unit_mean(rng, p.m)) * geo.V1;
        amp2 = std::sqrt(gamma_unit_mean(rng, p.m)) * geo.V2;
      } else {
        const double root = std::sqrt(gamma_unit_mean(rng, p.m));
        amp1 = root * geo.V1;
        amp2 = root * geo.V2;
      }
      const double phi1 = 2.0 * M_PI * rng.uniform();
      const double phi2 = 2.0 * M_PI * rng.uniform();
      const double re =
          amp1 * std::cos(phi1) + amp2 * std::cos(phi2) + kSigma * rng.normal();
      const double im =
          amp1 * std::sin(phi1) + amp2 * std::sin(phi2) + kSigma * rng.normal();
      const double power = re * re + im * im;
      batch.envelope[static_cast<std::size_t>(i)] = std::sqrt(power);
      batch.snr[static_cast<std::size_t>(i)] = snr_scale * power;
    }
  });
  return batch;
}

}  // namespace

void SampleConfig::validate() const {
  if (n_samples < 1) throw DomainError("SampleConfig: n_samples must be >= 1");
  if (!(es_over_n0 > 0.0))
    throw DomainError("SampleConfig: es_over_n0 must be > 0");
}

SampleBatch sample_ftr(const FtrParams& p, const SampleConfig& cfg) {
  return sample_impl(p, cfg, false);
}

SampleBatch sample_independent(const FtrParams& p, const SampleConfig& cfg) {
  return sample_impl(p, cfg, true);
}

MgfEstimate empirical_mgf(const SampleBatch& batch, double s) {
  if (s > 0.0) throw DomainError("empirical_mgf: requires s <= 0");
  if (batch.snr.empty()) throw DomainError("empirical_mgf: empty batch");
  const std::size_t n = batch.snr.size();
  if (s == 0.0) return {1.0, 0.0};
  long double sum = 0.0L, sum_sq = 0.0L;
  for (double v : batch.snr) {
    const long double e = std::exp(s * v);
    sum += e;
    sum_sq += e * e;
  }
  const double mean = static_cast<double>(sum / n);
  const double var =
      static_cast<double>((sum_sq - sum * sum / static_cast<long double>(n)) /
                          (static_cast<long double>(n) - 1.0L));
  return {mean, std::sqrt(std::max(var, 0.0) / static_cast<double>(n))};
}

void write_csv(const SampleBatch& batch, std::ostream& os) {
  os << "snr,envelope\n";
  char line[80];
  for (std::size_t i = 0; i < batch.snr.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g\n", batch.snr[i],
                  batch.envelope[i]);
    os << line;
  }
}

void write_binary(const SampleBatch& batch, std::uint64_t seed,
                  std::ostream& os) {
  const char magic[8] = {'F', 'T', 'R', 'B', 'I', 'N', '0', '1'};
  const std::uint64_t n = batch.snr.size();
  os.write(magic, 8);
  os.write(reinterpret_cast<const char*>(&n), 8);
  os.write(reinterpret_cast<const char*>(&seed), 8);
  os.write(reinterpret_cast<const char*>(batch.snr.data()),
           static_cast<std::streamsize>(n * sizeof(double)));
  os.write(reinterpret_cast<const char*>(batch.envelope.data()),
           static_cast<std::streamsize>(n * sizeof(double)));
}

SampleBatch read_binary(std::istream& is, std::uint64_t* seed) {
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, "FTRBIN01", 8) != 0)
    throw DomainError("read_binary: bad magic");
  std::uint64_t n = 0, stored_seed = 0;
  is.read(reinterpret_cast<char*>(&n), 8);
  is.read(reinterpret_cast<char*>(&stored_seed), 8);
  if (!is) throw DomainError("read_binary: truncated header");
  SampleBatch batch;
  batch.snr.resize(n);
  batch.envelope.resize(n);
  is.read(reinterpret_cast<char*>(batch.snr.data()),
          static_cast<std::streamsize>(n * sizeof(double)));
  is.read(reinterpret_cast<char*>(batch.envelope.data()),
          static_cast<std::streamsize>(n * sizeof(double)));
  if (!is) throw DomainError("read_binary: truncated payload");
  if (seed != nullptr) *seed = stored_seed;
  return batch;
}

}  // namespace ftr
