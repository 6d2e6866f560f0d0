// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#include "ftr/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <string>

#include "ftr/errors.hpp"
#include "ftr/parallel.hpp"

namespace ftr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Inversion settings for fit-time CDF evaluation. The convergence gate is
/// disabled: hopeless parameter cells produce tail values below the
/// inversion noise floor, which is exactly what makes their epsilon blow
/// up and lose the search.
LaplaceInversion fit_inversion() {
  LaplaceInversion cfg;
  cfg.target_rel_error = 1.0;
  return cfg;
}

/// max |log10 emp - log10 model| with optional early abort once the
/// running maximum already exceeds `prune_above` (the exact value no
/// longer matters to an argmin). Model CDF values <= 0 map to +inf here;
/// the public epsilon() reports them as DomainError instead.
template <typename CdfFn>
double epsilon_scan(const EmpiricalCdf& emp, const CdfFn& model_cdf,
                    double prune_above, bool throw_on_zero) {
  double worst = 0.0;
  for (const auto& pt : emp.points) {
    const double f = model_cdf(pt.amplitude);
    if (!(f > 0.0)) {
      if (throw_on_zero)
        throw DomainError("epsilon: theoretical CDF is 0 at amplitude " +
                          std::to_string(pt.amplitude));
      return kInf;
    }
    worst = std::max(worst,
                     std::abs(std::log10(pt.probability) - std::log10(f)));
    if (worst > prune_above) return worst;
  }
  return worst;
}

struct Candidate {
  double eps = kInf;
  double k = 0.0;
  double delta = 0.0;
  double m = 0.0;

  /// Lexicographic (eps, K, Delta, m) so grid ties resolve the same way on
  /// every run and thread count.
  bool better_than(const Candidate& o) const {
    if (eps != o.eps) return eps < o.eps;
    if (k != o.k) return k < o.k;
    if (delta != o.delta) return delta < o.delta;
    return m < o.m;
  }
};

/// Two-dimensional Nelder-Mead (reflection/expansion/contraction/shrink)
/// on an objective that returns +inf outside its feasible box.
template <typename Fn>
std::pair<std::array<double, 2>, double> nelder_mead2(
    const Fn& objective, std::array<double, 2> start,
    std::array<double, 2> step, int iterations) {
  struct Vertex {
    std::array<double, 2> x;
    double f;
  };
  std::array<Vertex, 3> simplex;
  simplex[0] = {start, objective(start)};
  for (int i = 0; i < 2; ++i) {
    auto x = start;
    x[static_cast<std::size_t>(i)] += step[static_cast<std::size_t>(i)];
    simplex[static_cast<std::size_t>(i) + 1] = {x, objective(x)};
  }
  auto order = [&] {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  order();
  for (int it = 0; it < iterations; ++it) {
    const std::array<double, 2> centroid = {
        0.5 * (simplex[0].x[0] + simplex[1].x[0]),
        0.5 * (simplex[0].x[1] + simplex[1].x[1])};
    auto blend = [&](double t) {
      return std::array<double, 2>{centroid[0] + t * (centroid[0] - simplex[2].x[0]),
                                   centroid[1] + t * (centroid[1] - simplex[2].x[1])};
    };
    const auto xr = blend(1.0);
    const double fr = objective(xr);
    if (fr < simplex[0].f) {
      const auto xe = blend(2.0);
      const double fe = objective(xe);
      simplex[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < simplex[1].f) {
      simplex[2] = {xr, fr};
    } else {
      const auto xc = blend(-0.5);
      const double fc = objective(xc);
      if (fc < simplex[2].f) {
        simplex[2] = {xc, fc};
      } else {
        for (int i = 1; i < 3; ++i) {
          auto& v = simplex[static_cast<std::size_t>(i)];
          v.x = {0.5 * (v.x[0] + simplex[0].x[0]),
                 0.5 * (v.x[1] + simplex[0].x[1])};
          v.f = objective(v.x);
        }
      }
    }
    order();
    if (std::abs(simplex[2].f - simplex[0].f) <=
        1e-12 * std::max(1.0, std::abs(simplex[0].f)))
      break;
  }
  return {simplex[0].x, simplex[0].f};
}

}  // namespace

void EmpiricalCdf::validate() const {
  if (points.size() < 10)
    throw DomainError("EmpiricalCdf: needs at least 10 points");
  double prev_a = 0.0, prev_p = 0.0;
  for (const auto& pt : points) {
    if (!(pt.amplitude > prev_a))
      throw DomainError("EmpiricalCdf: amplitudes must be positive and "
                        "strictly increasing");
    if (!(pt.probability > 0.0) || pt.probability > 1.0)
      throw DomainError("EmpiricalCdf: probabilities must lie in (0, 1]");
    if (pt.probability < prev_p)
      throw DomainError("EmpiricalCdf: probabilities must be non-decreasing");
    prev_a = pt.amplitude;
    prev_p = pt.probability;
  }
}

double EmpiricalCdf::second_moment() const {
  validate();
  double acc = 0.0, prev_p = 0.0;
  for (const auto& pt : points) {
    acc += pt.amplitude * pt.amplitude * (pt.probability - prev_p);
    prev_p = pt.probability;
  }
  const double back = points.back().amplitude;
  acc += back * back * (1.0 - prev_p);
  return acc;
}

EmpiricalCdf EmpiricalCdf::from_samples(std::vector<double> amplitudes,
                                        int max_points, double p_min,
                                        double p_max) {
  if (amplitudes.empty()) throw DomainError("from_samples: empty sample set");
  if (max_points < 10) throw DomainError("from_samples: max_points < 10");
  std::sort(amplitudes.begin(), amplitudes.end());
  const std::int64_t n = static_cast<std::int64_t>(amplitudes.size());
  const std::int64_t lo = std::max<std::int64_t>(
      0, static_cast<std::int64_t>(std::ceil(p_min * n)) - 1);
  const std::int64_t hi = std::min<std::int64_t>(
      n - 1, static_cast<std::int64_t>(std::floor(p_max * n)) - 1);
  if (hi - lo + 1 < 10)
    throw DomainError("from_samples: [p_min, p_max] leaves fewer than 10 points");

  EmpiricalCdf out;
  const std::int64_t span = hi - lo;
  const int want = static_cast<int>(
      std::min<std::int64_t>(max_points, span + 1));
  for (int j = 0; j < want; ++j) {
    const std::int64_t idx =
        lo + (want == 1 ? 0 : span * j / (want - 1));
    const double amp = amplitudes[static_cast<std::size_t>(idx)];
    const double prob =
        static_cast<double>(idx + 1) / static_cast<double>(n);
    // Equal amplitudes collapse to the highest attained level.
    if (!out.points.empty() && out.points.back().amplitude == amp) {
      out.points.back().probability = prob;
    } else {
      out.points.push_back({amp, prob});
    }
  }
  out.validate();
  return out;
}

EmpiricalCdf EmpiricalCdf::read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw DomainError("EmpiricalCdf: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "amplitude,cdf")
    throw DomainError("EmpiricalCdf: expected header 'amplitude,cdf'");
  EmpiricalCdf out;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, p;
    if (!std::getline(row, a, ',') || !std::getline(row, p))
      throw DomainError("EmpiricalCdf: malformed row '" + line + "'");
    out.points.push_back({std::stod(a), std::stod(p)});
  }
  out.validate();
  return out;
}

void SearchConfig::validate() const {
  if (!(k_min > 0.0) || !(k_max > k_min) || k_points < 2)
    throw DomainError("SearchConfig: need 0 < k_min < k_max, k_points >= 2");
  if (!(delta_step > 0.0) || delta_step > 1.0)
    throw DomainError("SearchConfig: delta_step must lie in (0, 1]");
  if (refine_iterations < 0)
    throw DomainError("SearchConfig: refine_iterations must be >= 0");
}

FtrParams FitResult::params() const {
  if (!std::isfinite(m))
    throw DomainError("FitResult: the Rician limit has no finite-m params");
  return FtrParams(K, Delta, m, omega);
}

double epsilon(const EmpiricalCdf& emp, const FtrParams& p) {
  emp.validate();
  p.validate();
  p.m_as_int();
  const LaplaceInversion inv = fit_inversion();
  return epsilon_scan(
      emp,
      [&](double r) { return cdf_exact(p, r * r, inv); },
      kInf, /*throw_on_zero=*/true);
}

double epsilon_rician(const EmpiricalCdf& emp, double k, double omega) {
  emp.validate();
  if (k < 0.0 || !(omega > 0.0))
    throw DomainError("epsilon_rician: need k >= 0 and omega > 0");
  return epsilon_scan(
      emp, [&](double r) { return rician_envelope_cdf(k, omega, r); }, kInf,
      /*throw_on_zero=*/true);
}

double rician_envelope_cdf(double k, double omega, double r) {
  if (k < 0.0 || !(omega > 0.0) || r < 0.0)
    throw DomainError("rician_envelope_cdf: bad arguments");
  if (r == 0.0) return 0.0;
  // Noncentral chi-square (2 dof) mixture: F = sum_k Pois(k; K) P(k+1, y/2)
  // with y/2 = (1+K) r^2 / omega. All terms positive.
  const double yh = (1.0 + k) * r * r / omega;
  double pois = std::exp(-k);
  double g = std::exp(-yh);
  double p_gamma = 1.0 - g;  // P(1, yh)
  double cum_pois = 0.0;
  double f = 0.0;
  const int kmax =
      static_cast<int>(k + 40.0 * std::sqrt(k + 4.0) + 40.0);
  for (int j = 0; j <= kmax; ++j) {
    f += pois * p_gamma;
    cum_pois += pois;
    if (static_cast<double>(j) > k &&
        (1.0 - cum_pois) * p_gamma < 1e-16 * f + 1e-300)
      break;
    pois *= k / (j + 1.0);
    g *= yh / (j + 1.0);
    p_gamma = std::max(p_gamma - g, 0.0);
  }
  return std::min(f, 1.0);
}

std::vector<int> default_m_candidates() {
  std::vector<int> m{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 20};
  return m;
}

FitResult fit_ftr(const EmpiricalCdf& emp, const std::vector<int>& m_candidates,
                  const SearchConfig& search) {
  emp.validate();
  search.validate();
  if (m_candidates.empty())
    throw DomainError("fit_ftr: m_candidates must not be empty");
  for (int m : m_candidates)
    if (m < 1) throw DomainError("fit_ftr: m candidates must be >= 1");

  const double omega = emp.second_moment();
  const LaplaceInversion inv = fit_inversion();

  std::vector<double> k_grid(static_cast<std::size_t>(search.k_points));
  const double lmin = std::log(search.k_min), lmax = std::log(search.k_max);
  for (int j = 0; j < search.k_points; ++j)
    k_grid[static_cast<std::size_t>(j)] =
        std::exp(lmin + (lmax - lmin) * j / (search.k_points - 1));
  std::vector<double> d_grid;
  for (double d = 0.0; d < 1.0 + 0.5 * search.delta_step;
       d += search.delta_step)
    d_grid.push_back(std::min(d, 1.0));

  struct Cell {
    int m;
    double k, delta;
  };
  std::vector<Cell> cells;
  for (int m : m_candidates)
    for (double k : k_grid)
      for (double d : d_grid) cells.push_back({m, k, d});

  std::vector<double> cell_eps(cells.size(), kInf);
  std::int64_t evaluations = 0;
  // Cells are independent; a static index partition keeps the scan
  // deterministic for any worker count.
  parallel_chunks(static_cast<std::int64_t>(cells.size()),
                  [&](std::int64_t begin, std::int64_t end) {
                    for (std::int64_t i = begin; i < end; ++i) {
                      const Cell& c = cells[static_cast<std::size_t>(i)];
                      try {
                        const FtrParams p(c.k, c.delta, c.m, omega);
                        cell_eps[static_cast<std::size_t>(i)] = epsilon_scan(
                            emp,
                            [&](double r) { return cdf_exact(p, r * r, inv); },
                            kInf, false);
                      } catch (const DomainError&) {
                      } catch (const NonConvergence&) {
                      }
                    }
                  });
  evaluations += static_cast<std::int64_t>(cells.size());

  Candidate best;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Candidate c{cell_eps[i], cells[i].k, cells[i].delta,
                      static_cast<double>(cells[i].m)};
    if (c.better_than(best)) best = c;
  }
  if (!std::isfinite(best.eps))
    throw NoFit("fit_ftr: every grid evaluation failed");

  // Local refinement on (log K, Delta) at the winning m.
  const int m_best = static_cast<int>(best.m);
  std::int64_t refine_evals = 0;
  auto objective = [&](const std::array<double, 2>& x) {
    ++refine_evals;
    const double k = std::exp(x[0]);
    const double d = x[1];
    if (d < 0.0 || d > 1.0 || k < 0.5 * search.k_min || k > 2.0 * search.k_max)
      return kInf;
    try {
      const FtrParams p(k, d, m_best, omega);
      return epsilon_scan(
          emp, [&](double r) { return cdf_exact(p, r * r, inv); }, kInf,
          false);
    } catch (const DomainError&) {
      return kInf;
    } catch (const NonConvergence&) {
      return kInf;
    }
  };
  const auto [xbest, fbest] = nelder_mead2(
      objective, {std::log(best.k), best.delta},
      {0.5 * (lmax - lmin) / (search.k_points - 1), 0.5 * search.delta_step},
      search.refine_iterations);
  evaluations += refine_evals;
  if (fbest < best.eps) {
    best.eps = fbest;
    best.k = std::exp(xbest[0]);
    best.delta = xbest[1];
  }

  FitResult out;
  out.K = best.k;
  out.Delta = best.delta;
  out.m = best.m;
  out.omega = omega;
  out.epsilon = best.eps;
  out.evaluations = evaluations;
  return out;
}

FitResult fit_rician(const EmpiricalCdf& emp, const SearchConfig& search) {
  emp.validate();
  search.validate();
  const double omega = emp.second_moment();
  std::int64_t evaluations = 0;
  auto objective = [&](double log_k) {
    ++evaluations;
    return epsilon_scan(
        emp,
        [&](double r) {
          return rician_envelope_cdf(std::exp(log_k), omega, r);
        },
        kInf, false);
  };

  const double lmin = std::log(search.k_min), lmax = std::log(search.k_max);
  double best_x = lmin, best_f = kInf;
  for (int j = 0; j < search.k_points; ++j) {
    const double x = lmin + (lmax - lmin) * j / (search.k_points - 1);
    const double f = objective(x);
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
  }
  if (!std::isfinite(best_f))
    throw NoFit("fit_rician: every grid evaluation failed");

  // Golden-section refinement inside the bracketing grid cells.
  const double h = (lmax - lmin) / (search.k_points - 1);
  double lo = std::max(lmin, best_x - h), hi = std::min(lmax, best_x + h);
  constexpr double kGolden = 0.6180339887498949;
  double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
  double f1 = objective(x1), f2 = objective(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-10; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = objective(x2);
    }
  }
  const double xm = f1 < f2 ? x1 : x2;
  const double fm = std::min(f1, f2);
  if (fm < best_f) {
    best_f = fm;
    best_x = xm;
  }

  FitResult out;
  out.K = std::exp(best_x);
  out.Delta = 0.0;
  out.m = kInf;  // the Rician cell is the m -> inf limit
  out.omega = omega;
  out.epsilon = best_f;
  out.evaluations = evaluations;
  return out;
}

}  // namespace ftr
