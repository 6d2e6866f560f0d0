// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <doctest.h>

#include "ftr/errors.hpp"
#include "ftr/model.hpp"

using namespace ftr;

TEST_SUITE("mixture_coeffs") {
  TEST_CASE("M = 1 by hand: alpha = 1, delta = Delta") {
    // int_0^1 (u - 1) du = -1/2, so alpha_1 = -2 * (-1/2) = 1.
    const auto c = mixture_coeffs(FtrParams(0.4, 0.8, 2, 1), 1);
    REQUIRE(c.M == 1);
    CHECK(c.alpha[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.delta[0] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK_FALSE(c.precision_warning);
  }

  TEST_CASE("weights sum to 1 for M = 1..20") {
    const FtrParams p(0.4, 0.8, 2, 1);
    for (int m = 1; m <= 20; ++m) {
      const auto c = mixture_coeffs(p, m);
      double sum = 0.0;
      for (double a : c.alpha) sum += a;
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
  }

  TEST_CASE("delta nodes follow the cosine rule") {
    const auto c = mixture_coeffs(FtrParams(1.0, 0.9, 2, 1), 3);
    CHECK(c.delta[0] == doctest::Approx(0.9));
    CHECK(c.delta[1] == doctest::Approx(0.9 * std::cos(M_PI / 5.0)));
    CHECK(c.delta[2] == doctest::Approx(0.9 * std::cos(2.0 * M_PI / 5.0)));
    CHECK(std::abs(c.delta[2]) <= 0.9);
  }

  TEST_CASE("Delta = 0 zeroes every node") {
    const auto c = mixture_coeffs(FtrParams(3.0, 0.0, 2, 1), 5);
    for (double d : c.delta) CHECK(d == 0.0);
  }

  TEST_CASE("order bound M > ceil(K Delta)") {
    const FtrParams p(15, 0.9, 5, 1);  // ceil(13.5) = 14
    CHECK_THROWS_AS(mixture_coeffs(p, 14), DomainError);
    CHECK_NOTHROW(mixture_coeffs(p, 15));
    CHECK_THROWS_AS(mixture_coeffs(p, 0), DomainError);
  }

  TEST_CASE("precision warning beyond M = 25") {
    CHECK_FALSE(mixture_coeffs(FtrParams(1, 0.5, 2, 1), 25).precision_warning);
    CHECK(mixture_coeffs(FtrParams(1, 0.5, 2, 1), 26).precision_warning);
  }

  TEST_CASE("large order still sums to 1 in exact arithmetic") {
    const auto c = mixture_coeffs(FtrParams(80, 0.5873, 2, 1), 48);
    double sum = 0.0;
    for (double a : c.alpha) sum += a;
    // The alternating weights grow large here; the exact rational route
    // keeps their double conversions summing to 1 up to accumulated
    // rounding of the large terms.
    double scale = 0.0;
    for (double a : c.alpha) scale = std::max(scale, std::abs(a));
    CHECK(std::abs(sum - 1.0) <= 1e-14 * scale);
  }
}
