// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#include "ftr/laplace.hpp"

#include <cmath>
#include <complex>

#include <doctest.h>

#include "ftr/errors.hpp"

using namespace ftr;
using cplx = std::complex<double>;

namespace {

// Fixed Talbot trades truncation against exp(2M/5) rounding growth; around
// 22 nodes both sit near 1e-12 in double precision.
LaplaceInversion talbot_cfg() {
  LaplaceInversion cfg;
  cfg.method = InversionMethod::kFixedTalbot;
  cfg.terms = 22;
  cfg.target_rel_error = 1e-5;
  return cfg;
}

}  // namespace

TEST_SUITE("inverse_laplace") {
  TEST_CASE("known pair 1/(s+beta) -> exp(-beta x)") {
    const double beta = 16.0;  // (1+K)/gamma_bar at K = 15
    auto transform = [beta](cplx s) { return 1.0 / (s + beta); };
    for (double x : {0.02, 0.1, 0.2}) {
      const auto euler = inverse_laplace(transform, x, {});
      CHECK(euler.value ==
            doctest::Approx(std::exp(-beta * x)).epsilon(1e-8));
      const auto talbot = inverse_laplace(transform, x, talbot_cfg());
      CHECK(talbot.value ==
            doctest::Approx(std::exp(-beta * x)).epsilon(1e-8));
    }
  }

  TEST_CASE("ramp pair 1/s^2 -> x") {
    auto transform = [](cplx s) { return 1.0 / (s * s); };
    CHECK(inverse_laplace(transform, 2.0, {}).value ==
          doctest::Approx(2.0).epsilon(1e-8));
    CHECK(inverse_laplace(transform, 2.0, talbot_cfg()).value ==
          doctest::Approx(2.0).epsilon(1e-8));
  }

  TEST_CASE("unit-mean exponential density recovered with sup error 1e-7") {
    auto transform = [](cplx s) { return 1.0 / (1.0 + s); };
    double sup_euler = 0.0, sup_talbot = 0.0;
    for (double x = 0.01; x <= 10.0; x += 0.09) {
      const double f = std::exp(-x);
      sup_euler =
          std::max(sup_euler,
                   std::abs(inverse_laplace(transform, x, {}).value - f));
      sup_talbot = std::max(
          sup_talbot,
          std::abs(inverse_laplace(transform, x, talbot_cfg()).value - f));
    }
    CHECK(sup_euler <= 1e-7);
    CHECK(sup_talbot <= 1e-7);
  }

  TEST_CASE("shifted transform with a right-half-plane singularity") {
    // L[exp(2x)] = 1/(s-2): rightmost singularity at +2.
    LaplaceInversion cfg;
    cfg.singularity_abscissa = 2.0;
    auto transform = [](cplx s) { return 1.0 / (s - 2.0); };
    CHECK(inverse_laplace(transform, 1.5, cfg).value ==
          doctest::Approx(std::exp(3.0)).epsilon(1e-7));
  }

  TEST_CASE("error estimate is reported and gates convergence") {
    auto transform = [](cplx s) { return 1.0 / (1.0 + s); };
    const auto r = inverse_laplace(transform, 1.0, {});
    CHECK(r.rel_error_estimate >= 0.0);
    CHECK(r.rel_error_estimate < 1e-7);

    LaplaceInversion strict;
    strict.target_rel_error = 1e-16;  // below double rounding noise
    try {
      // A kinked original (|L^-1| has slope breaks) keeps the Euler window
      // difference well above 1e-16.
      auto hard = [](cplx s) { return 1.0 / (s * s * s + s); };
      const auto res = inverse_laplace(hard, 7.0, strict);
      // If it converged this tightly, the estimate must say so.
      CHECK(res.rel_error_estimate <= 1e-16);
    } catch (const NonConvergence& e) {
      CHECK(e.error_estimate() > 1e-16);
      CHECK(std::isfinite(e.value()));
    }
  }

  TEST_CASE("input validation") {
    auto transform = [](cplx s) { return 1.0 / s; };
    CHECK_THROWS_AS(inverse_laplace(transform, 0.0, {}), DomainError);
    LaplaceInversion bad;
    bad.terms = 5;
    CHECK_THROWS_AS(inverse_laplace(transform, 1.0, bad), DomainError);
  }
}
