// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#include "ftr/model.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "ftr/errors.hpp"
#include "ftr/quadrature.hpp"
#include "support/oracles.hpp"

using namespace ftr;

namespace {

// Eq-form quadratic and its factorized twin, both straight from the
// parameters; used as an identity oracle for poly_coeffs.
double quadratic_direct(const FtrParams& p, double s) {
  const double gs = p.gamma_bar * s;
  const double mk = p.m + p.K;
  const double dk = p.Delta * p.K;
  return (mk * mk - dk * dk) * gs * gs - 2.0 * p.m * (1.0 + p.K) * mk * gs +
         p.m * p.m * (1.0 + p.K) * (1.0 + p.K);
}

double quadratic_factorized(const FtrParams& p, double s) {
  const double gs = p.gamma_bar * s;
  const double a = p.m * (1.0 + p.K) - (p.m + p.K * (1.0 + p.Delta)) * gs;
  const double b = p.m * (1.0 + p.K) - (p.m + p.K * (1.0 - p.Delta)) * gs;
  return a * b;
}

LaplaceInversion loose_inversion() {
  LaplaceInversion cfg;
  cfg.target_rel_error = 1.0;
  return cfg;
}

}  // namespace

TEST_SUITE("ftr_params") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(FtrParams(0.0, 0.0, 1.0, 1.0));
    CHECK_THROWS_AS(FtrParams(-0.1, 0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(FtrParams(1.0, 1.1, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(FtrParams(1.0, -0.2, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(FtrParams(1.0, 0.5, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(FtrParams(1.0, 0.5, 1.0, 0.0), DomainError);
    // Delta has no meaning without specular power.
    CHECK_THROWS_AS(FtrParams(0.0, 0.3, 1.0, 1.0), DomainError);
  }

  TEST_CASE("integer m detection") {
    CHECK(FtrParams(1, 0.5, 5.0, 1).integer_m());
    CHECK(FtrParams(1, 0.5, 5.0 + 1e-12, 1).integer_m());
    CHECK_FALSE(FtrParams(1, 0.5, 2.5, 1).integer_m());
    CHECK(FtrParams(1, 0.5, 5.0, 1).m_as_int() == 5);
  }
}

TEST_SUITE("geometry") {
  TEST_CASE("no specular power") {
    const auto g = params_to_geometry(FtrParams(0, 0, 1, 1), 1.0);
    CHECK(g.V1 == 0.0);
    CHECK(g.V2 == 0.0);
  }

  TEST_CASE("equal components at Delta = 1") {
    const double k = 3.7, sigma = 0.8;
    const auto g = params_to_geometry(FtrParams(k, 1.0, 2, 1), sigma);
    CHECK(g.V1 == doctest::Approx(sigma * std::sqrt(k)).epsilon(1e-14));
    CHECK(g.V2 == doctest::Approx(g.V1).epsilon(1e-14));
  }

  TEST_CASE("round trip recovers K and Delta to 1e-12") {
    for (const auto& [k, d] : std::vector<std::pair<double, double>>{
             {15.0, 0.9}, {0.3, 0.0}, {80.0, 0.5873}, {4.0, 1.0}}) {
      const auto g = params_to_geometry(FtrParams(k, d, 2, 1), M_SQRT1_2);
      CHECK(g.V1 >= g.V2);
      const auto back = geometry_to_params(g);
      CHECK(back.K == doctest::Approx(k).epsilon(1e-12));
      CHECK(back.Delta == doctest::Approx(d).epsilon(1e-12));
    }
  }
}

TEST_SUITE("mgf") {
  TEST_CASE("normalization at s = 0") {
    CHECK(mgf(FtrParams(15, 0.9, 5, 1), 0.0) == 1.0);
    CHECK(mgf(FtrParams(15, 0.9, 2.31, 1), 0.0) == 1.0);
  }

  TEST_CASE("Rayleigh reduction for K = 0 at any m") {
    const FtrParams p(0, 0, 3, 2);
    CHECK(mgf(p, -1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    const FtrParams frac(0, 0, 2.6, 2);
    CHECK(mgf(frac, -1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }

  TEST_CASE("rejects s > 0") {
    CHECK_THROWS_AS(mgf(FtrParams(1, 0.5, 2, 1), 0.1), DomainError);
  }

  TEST_CASE("derivative at origin recovers the mean") {
    CHECK(mgf_derivative_mean(FtrParams(0, 0, 1, 3.7)) ==
          doctest::Approx(3.7).epsilon(1e-6));
    CHECK(mgf_derivative_mean(FtrParams(15, 0.9, 5, 1)) ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(mgf_derivative_mean(FtrParams(32.7, 0.8331, 10, 2)) ==
          doctest::Approx(2.0).epsilon(1e-6));
    CHECK(mgf_derivative_mean(FtrParams(8, 0.9, 2.5, 0.5)) ==
          doctest::Approx(0.5).epsilon(1e-6));
  }
}

TEST_SUITE("poly_coeffs") {
  TEST_CASE("degenerate configurations") {
    const auto ray = poly_coeffs(FtrParams(0, 0, 4, 2));
    CHECK(ray.a1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ray.a2 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ray.a3 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ray.a4 == doctest::Approx(0.5).epsilon(1e-15));

    const auto nod = poly_coeffs(FtrParams(4, 0, 3, 1));
    CHECK(nod.a2 == doctest::Approx(nod.a1).epsilon(1e-15));
    CHECK(nod.a3 == doctest::Approx(nod.a1).epsilon(1e-15));
  }

  TEST_CASE("ordering a2 <= a1 <= a3 <= a4 and positivity") {
    for (const auto& p :
         {FtrParams(15, 0.9, 5, 1), FtrParams(4, 0.5, 2, 3),
          FtrParams(80, 0.5873, 2, 1), FtrParams(0.3, 1.0, 7, 0.2)}) {
      const auto a = poly_coeffs(p);
      CHECK(a.a2 > 0.0);
      CHECK(a.a2 <= a.a1 + 1e-15);
      CHECK(a.a1 <= a.a3 + 1e-15);
      CHECK(a.a3 <= a.a4 + 1e-15);
    }
  }

  TEST_CASE("factorization identity at 100 random s") {
    oracles::SplitMix64 rng(7ull);
    for (const auto& p :
         {FtrParams(15, 0.9, 5, 1), FtrParams(4, 0.5, 2, 3),
          FtrParams(80, 0.5873, 2, 1)}) {
      for (int i = 0; i < 100; ++i) {
        const double s = -10.0 * rng.uniform();
        CHECK(quadratic_factorized(p, s) ==
              doctest::Approx(quadratic_direct(p, s)).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("non-integer m is rejected") {
    CHECK_THROWS_AS(poly_coeffs(FtrParams(1, 0.5, 2.5, 1)), DomainError);
  }
}

TEST_SUITE("pdf_cdf_exact") {
  TEST_CASE("exponential special case") {
    const FtrParams p(0, 0, 1, 1);
    CHECK(pdf_exact(p, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
    const FtrParams p2(0, 0, 2, 1);
    CHECK(cdf_exact(p2, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-8));
  }

  TEST_CASE("support boundary") {
    const FtrParams p(15, 0.9, 5, 1);
    CHECK(cdf_exact(p, 0.0) == 0.0);
    CHECK(pdf_exact(p, 0.0) >= 0.0);
    CHECK_THROWS_AS(pdf_exact(p, -0.1), DomainError);
    CHECK_THROWS_AS(pdf_exact(FtrParams(15, 0.9, 2.5, 1), 1.0), DomainError);
  }

  TEST_CASE("initial value theorem matches the small-x limit") {
    const FtrParams p(15, 0.9, 5, 1);
    CHECK(pdf_exact(p, 0.0) ==
          doctest::Approx(pdf_exact(p, 1e-7)).epsilon(1e-4));
  }

  TEST_CASE("density integrates to 1") {
    const LaplaceInversion inv = loose_inversion();
    for (const auto& p : {FtrParams(15, 0.9, 5, 1), FtrParams(4, 0.5, 3, 1)}) {
      Quadrature quad;
      quad.abs_tol = 1e-9;
      quad.rel_tol = 1e-8;
      const auto r = integrate_to_inf(
          [&](double x) { return pdf_exact(p, x, inv); }, 0.0, quad);
      CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
    }
  }

  TEST_CASE("non-negative and CDF monotone on a grid") {
    const FtrParams p(15, 0.9, 2, 1);
    const LaplaceInversion inv = loose_inversion();
    double prev = 0.0;
    for (double x = 0.0; x <= 8.0; x += 0.08) {
      CHECK(pdf_exact(p, x, inv) >= 0.0);
      const double f = cdf_exact(p, x, inv);
      CHECK(f >= prev - 1e-9);
      prev = f;
    }
    CHECK(prev > 0.99);
  }

  TEST_CASE("MGF/PDF duality") {
    const FtrParams p(15, 0.9, 5, 1);
    const LaplaceInversion inv = loose_inversion();
    for (double s : {-0.25, -1.0, -4.0}) {
      Quadrature quad;
      quad.abs_tol = 1e-9;
      const auto r = integrate_to_inf(
          [&](double x) { return std::exp(s * x) * pdf_exact(p, x, inv); },
          0.0, quad);
      CHECK(r.value == doctest::Approx(mgf(p, s)).epsilon(1e-5));
    }
  }

  TEST_CASE("CDF/PDF duality by central differences") {
    const FtrParams p(15, 0.9, 5, 1);
    const LaplaceInversion inv = loose_inversion();
    const double h = 1e-4;
    for (double x = 0.1; x <= 10.0; x += 0.9) {
      const double dcdf =
          (cdf_exact(p, x + h, inv) - cdf_exact(p, x - h, inv)) / (2.0 * h);
      CHECK(std::abs(dcdf - pdf_exact(p, x, inv)) <= 1e-5);
    }
  }

  TEST_CASE("euler and talbot agree") {
    const FtrParams p(15, 0.9, 5, 1);
    LaplaceInversion talbot;
    talbot.method = InversionMethod::kFixedTalbot;
    talbot.terms = 22;
    talbot.target_rel_error = 1e-4;
    for (double x : {0.05, 0.5, 1.0, 3.0, 10.0}) {
      const double e = pdf_exact(p, x);
      const double t = pdf_exact(p, x, talbot);
      CHECK(t == doctest::Approx(e).epsilon(1e-6));
    }
  }
}

TEST_SUITE("mixture_pdf_cdf") {
  TEST_CASE("K = 0 collapses to the exponential kernel") {
    const FtrParams p(0, 0, 3, 2);
    const auto c = mixture_coeffs(p, 4);
    const double beta = 0.5;  // (K+1)/gamma_bar
    for (double x : {0.0, 0.5, 2.0, 7.0}) {
      CHECK(pdf_approx(p, x, c) ==
            doctest::Approx(beta * std::exp(-beta * x)).epsilon(1e-12));
      CHECK(cdf_approx(p, x, c) ==
            doctest::Approx(1.0 - std::exp(-beta * x)).epsilon(1e-12));
    }
  }

  TEST_CASE("matches the exact density for the reference family") {
    const FtrParams p(15, 0.9, 5, 1);
    const auto c = mixture_coeffs(p, 15);  // ceil(K*Delta) + 1
    double peak = 0.0, sup = 0.0;
    for (double x = 0.0; x <= 5.0; x += 0.02) {
      const double exact = pdf_exact(p, x);
      peak = std::max(peak, exact);
      sup = std::max(sup, std::abs(exact - pdf_approx(p, x, c)));
    }
    CHECK(sup <= 5e-3 * peak);
  }

  TEST_CASE("CDF pair: tail limit and agreement with exact") {
    const FtrParams p(15, 0.9, 5, 1);
    const auto c = mixture_coeffs(p, 15);
    CHECK(cdf_approx(p, 50.0, c) == doctest::Approx(1.0).epsilon(1e-8));
    double sup = 0.0;
    for (double x = 0.0; x <= 10.0; x += 0.1)
      sup = std::max(sup, std::abs(cdf_exact(p, x) - cdf_approx(p, x, c)));
    CHECK(sup <= 5e-3);
  }

  TEST_CASE("approximate CDF differentiates back to the density") {
    const FtrParams p(4, 0.5, 3, 1);
    const auto c = mixture_coeffs(p, 3);
    const double h = 1e-4;
    for (double x = 0.1; x <= 6.0; x += 0.35) {
      const double d =
          (cdf_approx(p, x + h, c) - cdf_approx(p, x - h, c)) / (2.0 * h);
      CHECK(std::abs(d - pdf_approx(p, x, c)) <= 1e-6);
    }
  }

  TEST_CASE("Hoyt route: m = 1 mixture against the Corollary MGF inversion") {
    const FtrParams p(5, 0.6, 1, 1);
    const double q = hoyt_q(p);
    const auto c = mixture_coeffs(p, 4);
    for (double x : {0.2, 0.7, 1.8, 4.0}) {
      // Invert the Hoyt-form MGF (the Corollary route) and compare with the
      // mixture density.
      const auto inv = inverse_laplace(
          [&](std::complex<double> s) {
            const std::complex<double> gs = -s;  // gamma_bar = 1
            const double q2 = q * q;
            const double cc = 4.0 * q2 / ((1.0 + q2) * (1.0 + q2));
            return 1.0 / std::sqrt(cc * gs * gs - 2.0 * gs + 1.0);
          },
          x, loose_inversion());
      CHECK(pdf_approx(p, x, c) == doctest::Approx(inv.value).epsilon(2e-5));
    }
  }
}

TEST_SUITE("envelope") {
  TEST_CASE("Rayleigh envelope") {
    const FtrParams p(0, 0, 1, 1);
    for (double r : {0.3, 1.0, 1.7}) {
      CHECK(envelope_pdf(p, r, 1.0) ==
            doctest::Approx(2.0 * r * std::exp(-r * r)).epsilon(1e-7));
    }
    CHECK(envelope_pdf(p, 0.0, 1.0) == 0.0);
  }

  TEST_CASE("bimodality of the reference family") {
    // Strict local maxima on (0, 2) at 1e-3 resolution: exactly two for
    // m >= 5, at most two for m = 2.
    auto count_maxima = [](const FtrParams& p) {
      const auto c = mixture_coeffs(p, 15);
      std::vector<double> f;
      for (double r = 1e-3; r < 2.0; r += 1e-3)
        f.push_back(envelope_pdf_approx(p, r, 1.0, c));
      int maxima = 0;
      for (std::size_t i = 1; i + 1 < f.size(); ++i)
        if (f[i] > f[i - 1] && f[i] > f[i + 1]) ++maxima;
      return maxima;
    };
    CHECK(count_maxima(FtrParams(15, 0.9, 5, 1)) == 2);
    CHECK(count_maxima(FtrParams(15, 0.9, 10, 1)) == 2);
    CHECK(count_maxima(FtrParams(15, 0.9, 2, 1)) <= 2);
  }

  TEST_CASE("envelope pdf integrates to 1") {
    const FtrParams p(15, 0.9, 5, 1);
    const auto c = mixture_coeffs(p, 15);
    Quadrature quad;
    quad.abs_tol = 1e-10;
    const auto r = integrate_to_inf(
        [&](double v) { return envelope_pdf_approx(p, v, 1.0, c); }, 0.0,
        quad);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_SUITE("hoyt_and_reductions") {
  TEST_CASE("hoyt q anchors") {
    CHECK(hoyt_q(FtrParams(7.3, 0.0, 1, 1)) == doctest::Approx(1.0));
    CHECK(hoyt_q(FtrParams(1e6, 0.4, 1, 1)) ==
          doctest::Approx(std::sqrt(0.6 / 1.4)).epsilon(1e-3));
    CHECK_THROWS_AS(hoyt_q(FtrParams(5, 0.6, 2, 1)), DomainError);
  }

  TEST_CASE("m = 1 MGF equals the Hoyt MGF across s in [-20, 0]") {
    const FtrParams p(5, 0.6, 1, 1.3);
    const double q = hoyt_q(p);
    for (double s = -20.0; s <= 0.0; s += 0.5) {
      CHECK(mgf(p, s) ==
            doctest::Approx(hoyt_mgf(q, p.gamma_bar, s)).epsilon(1e-10));
    }
  }

  TEST_CASE("reduction rows at finite parameters") {
    const auto ray = reduce(FtrParams(0, 0, 7, 2), ReduceTarget::kRayleigh);
    const auto rs =
        reduce(FtrParams(4, 0, 3, 1), ReduceTarget::kRicianShadowed);
    const auto hoyt = reduce(FtrParams(5, 0.6, 1, 1), ReduceTarget::kHoyt);
    for (double s = -8.0; s <= 0.0; s += 0.25) {
      CHECK(mgf(FtrParams(0, 0, 7, 2), s) ==
            doctest::Approx(ray.mgf(s)).epsilon(1e-10));
      CHECK(mgf(FtrParams(4, 0, 3, 1), s) ==
            doctest::Approx(rs.mgf(s)).epsilon(1e-9));
      CHECK(mgf(FtrParams(5, 0.6, 1, 1), s) ==
            doctest::Approx(hoyt.mgf(s)).epsilon(1e-9));
    }
  }

  TEST_CASE("limit rows through surrogates") {
    const FtrParams twdp_p(6, 0.7, 1e4, 1);
    const auto twdp = reduce(twdp_p, ReduceTarget::kTwdp);
    const FtrParams nak_p(1e6, 0, 3, 1);
    const auto nak = reduce(nak_p, ReduceTarget::kNakagamiM);
    for (double s = -6.0; s <= 0.0; s += 0.5) {
      CHECK(mgf(twdp_p, s) == doctest::Approx(twdp.mgf(s)).epsilon(1e-3));
      CHECK(mgf(nak_p, s) == doctest::Approx(nak.mgf(s)).epsilon(1e-3));
    }
  }

  TEST_CASE("cell mismatch raises DomainError") {
    CHECK_THROWS_AS(reduce(FtrParams(4, 0.5, 3, 1), ReduceTarget::kRayleigh),
                    DomainError);
    CHECK_THROWS_AS(reduce(FtrParams(4, 0, 3, 1), ReduceTarget::kRician),
                    DomainError);
    CHECK_THROWS_AS(reduce(FtrParams(4, 0, 3, 1), ReduceTarget::kTwoWave),
                    DomainError);
  }
}

TEST_SUITE("mgf_independent") {
  TEST_CASE("normalization and sign restriction") {
    const FtrParams p(8, 0.9, 2, 1);
    CHECK(mgf_independent(p, 0.0) == 1.0);
    CHECK_THROWS_AS(mgf_independent(p, 0.3), DomainError);
  }

  TEST_CASE("Delta = 0 reduces to the Rician shadowed MGF") {
    const FtrParams p(4, 0, 3, 1);
    for (double s = -10.0; s <= 0.0; s += 0.5) {
      CHECK(mgf_independent(p, s) ==
            doctest::Approx(rician_shadowed_mgf(4, 3, 1, s)).epsilon(1e-9));
      // And coincides with the common-fluctuation model there.
      CHECK(mgf_independent(p, s) ==
            doctest::Approx(mgf(p, s)).epsilon(1e-9));
    }
  }

  TEST_CASE("large-m surrogate approaches the TWDP MGF") {
    const FtrParams p(6, 0.7, 1e4, 1);
    for (double s : {-4.0, -1.0, -0.25})
      CHECK(mgf_independent(p, s) ==
            doctest::Approx(twdp_mgf(6, 0.7, 1, s)).epsilon(1e-3));
  }
}
