#include <cmath>

#include "convexdom/bounds.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace convexdom;

TEST_CASE("gamma function") {
  CHECK(lanczos_gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(lanczos_gamma(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK(lanczos_gamma(3.7) == doctest::Approx(oracle::gamma_3_7_re).epsilon(1e-13));
  CHECK(lanczos_gamma(-0.5) == doctest::Approx(-2.0 * std::sqrt(kPi)).epsilon(1e-13));
  CHECK(std::abs(lanczos_log_gamma(0.1) - std::lgamma(0.1)) < 1e-13);
  CHECK_THROWS_AS(lanczos_gamma(-2.0), DomainError);
}

TEST_CASE("Gauss hypergeometric function") {
  CHECK(hyp2f1(0.3, 0.7, 1.9, 0.0) == 1.0);
  CHECK(std::abs(hyp2f1(1.0, 1.0, 2.0, -1.0) - std::log(2.0)) < 1e-13);
  CHECK(std::abs(hyp2f1(-0.5, 1.0, 2.0, 1.0) - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(hyp2f1(-0.5, 0.5, 1.5, -1.0) - oracle::hyp2f1_m05_05_15_m1_re) < 1e-12);
  CHECK(std::abs(hyp2f1(0.75, 1.0, 2.0, -1.0) - oracle::hyp2f1_075_1_2_m1_re) < 1e-12);
  // -ln(1 - x)/x inside the series region
  CHECK(std::abs(hyp2f1(1.0, 1.0, 2.0, 0.5) - 2.0 * std::log(2.0)) < 1e-14);
  // terminating series
  CHECK(std::abs(hyp2f1(-2.0, 1.0, 1.0, 0.95) - (1.0 - 0.95) * (1.0 - 0.95)) < 1e-14);
  CHECK_THROWS_AS(hyp2f1(1.0, 1.0, -2.0, 0.5), DomainError);
  CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 2.0, 1.5), DomainError);
  CHECK_THROWS_AS(hyp2f1(0.5, -0.3, -0.1, 0.95), UnsupportedParametersError);
}

TEST_CASE("series and Euler integral agree where both apply") {
  struct Triple {
    double a, b, c;
  };
  for (int n : {1, 2, 3}) {
    const double k = 1.0 / n;
    for (Triple t : {Triple{1.0, k, 1.0 + k}, Triple{1.0, 1.0 + k, 2.0 + k},
                     Triple{-0.5, k, 1.0 + k}, Triple{0.75, k + 3.0, 1.0 + k + 3.0}}) {
      for (double x : {-0.85, -0.5, 0.3, 0.85}) {
        CHECK(std::abs(hyp2f1_series(t.a, t.b, t.c, x) - hyp2f1_euler(t.a, t.b, t.c, x)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("confluent hypergeometric function") {
  CHECK(hyp1f1(0.4, 1.3, 0.0) == 1.0);
  CHECK(std::abs(hyp1f1(1.0, 2.0, -1.0) - (1.0 - std::exp(-1.0))) < 1e-15);
  CHECK(std::abs(hyp1f1(1.0, 2.0, 1.0) - (std::exp(1.0) - 1.0)) < 1e-14);
  CHECK(std::abs(hyp1f1(0.5, 1.5, -0.7) - oracle::hyp1f1_05_15_m07_re) < 1e-15);
  const Complex x{-0.3, 0.4};
  CHECK(std::abs(hyp1f1(1.0, 2.0, x) - (std::exp(x) - 1.0) / x) < 1e-14);
  CHECK(std::abs(hyp1f1(1.0, 2.0, -500.0) - 1.0 / 500.0) < 1e-15);
  CHECK_THROWS_AS(hyp1f1(1.0, 2.0, 800.0), RangeError);
}

TEST_CASE("lambda constants") {
  const double l = oracle::two_ln2_minus_1_re;
  CHECK(std::abs(lambda_for(JanowskiCase{1.0, -1.0}, 1).value.real() - l) < 1e-12);
  CHECK(std::abs(lambda_for(SqrtCase{0.0}, 4).value.real() - 1.0) < 1e-15);
  CHECK(std::abs(lambda_for(SqrtCase{1.0}, 1).value.real() - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(lambda_for(ExpCase{1.0}, 1).value.real() - (1.0 - std::exp(-1.0))) < 1e-14);
  CHECK(std::abs(lambda_for(ExpCase{0.5}, 2).value.real() - oracle::lambda2_mu_half_n2_re) <
        1e-13);
  CHECK(std::abs(lambda_for(JanowskiCase{0.5, -0.3}, 3).value.real() -
                 oracle::lambda1_A05_Bm03_n3_re) < 1e-12);
  CHECK(std::abs(lambda_for(SectorCase{1.0, 1.0}, 1).value.real() - l) < 1e-10);
  CHECK(lambda_for(ExpCase{Complex(0.3, 0.4)}, 1).tags.size() == 1);
  CHECK(lambda_for(ExpCase{0.8}, 1).tags.empty());
}

TEST_CASE("sector lambda with Levin acceleration") {
  const auto r = lambda_for(SectorCase{0.6, 0.6}, 2);
  CHECK(std::abs(r.value.real() - oracle::lambda4_rho06_n2_re) < 1e-9);
  CHECK(r.error_estimate < 1e-10);
  const auto c = lambda_for(SectorCase{1.0, 0.5}, 1);
  CHECK(std::abs(c.value - ORACLE(lambda4_rho1_rho05_n1)) < 1e-9);
  REQUIRE(c.tags.size() == 1);
  CHECK(c.tags[0] == "complex-lambda");
}

TEST_CASE("lambda equals Q(-1) by quadrature for every family") {
  for (int n : {1, 2, 3}) {
    for (const auto& t : {make_janowski(1.0, -1.0), make_janowski(0.4, -0.6), make_exp(0.9),
                          make_sqrt(1.0), make_sqrt(0.3), make_sector(0.7, 0.7),
                          make_sector(0.8, 0.4), make_shifted_halfplane(2.0)}) {
      CAPTURE(t.label);
      CAPTURE(n);
      const auto lam = lambda_for(*t.bound_case, n).value;
      CHECK(std::abs(lam - lambda_by_quadrature(t, n)) < 1e-9);
    }
  }
}

TEST_CASE("bound formulas") {
  CHECK(zeta_bound(0.0, 1.0, 0.0, 0.4) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(std::abs(zeta_bound(-1.0, 1.0, 0.0, oracle::two_ln2_minus_1_re) -
                 std::sqrt(2.0 * oracle::two_ln2_minus_1_re)) < 1e-15);
  CHECK(std::abs(zeta_bound(-1.0 / 3.0, 0.5, 1.0, 1.0 - std::exp(-1.0)) - oracle::zeta_exp_re) <
        1e-14);
  CHECK(std::abs(xi_bound(-2.0 / 3.0, 1.0, 0.25, oracle::two_ln2_minus_1_re) - oracle::xi_tan_re) <
        1e-14);
  CHECK(std::abs(xi_bound(0.0, 1.0, 1.0, 0.5) - std::tan(0.5)) < 1e-15);
  CHECK(std::abs(xi_bound(0.0, 1.0, 1.0, 1e-12)) < 1e-11);
  CHECK_THROWS_AS(xi_bound(0.0, 1.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(zeta_bound(0.0, -1.0, 0.0, 0.5), ValidationError);
}

TEST_CASE("Miller-Mocanu radius") {
  CHECK(std::abs(eta_miller_mocanu(0.5) - oracle::eta_half_re) < 1e-14);
  CHECK(std::abs(eta_miller_mocanu(oracle::two_ln2_minus_1_re) - oracle::eta_lambda_re) < 1e-14);
  CHECK(std::abs(eta_miller_mocanu(1.0 - 1e-12) - 1.0) < 1e-11);
  CHECK_THROWS_AS(eta_miller_mocanu(1.0), ValidationError);
}

TEST_CASE("bound report") {
  ParamSet p;
  const auto r = bound_report(p, make_janowski(1.0, -1.0));
  CHECK(r.case_id == 1);
  REQUIRE(r.zeta);
  CHECK(std::abs(*r.zeta - oracle::two_ln2_minus_1_re) < 1e-10);
  CHECK(r.quadrature_lambda_gap < 1e-9);
  REQUIRE(r.min_location);
  CHECK(r.min_location->at_minus_one);
  CHECK(r.tags.empty());

  ParamSet p2;
  p2.op = Operator::psi2;
  p2.alpha = -2.0 / 3.0;
  p2.gamma = 0.25;
  const auto r2 = bound_report(p2, make_shifted_halfplane(2.0), false);
  CHECK(r2.case_id == 1);
  CHECK(r2.xi);
  CHECK_FALSE(r2.zeta);

  auto custom = make_custom(
      "mobius", [](Complex z) { return (1.0 + 0.5 * z) / (1.0 - 0.2 * z); },
      [](Complex z) { return 0.7 / ((1.0 - 0.2 * z) * (1.0 - 0.2 * z)); },
      [](Complex z) { return 0.28 / std::pow(1.0 - 0.2 * z, 3); });
  CHECK_THROWS_AS(bound_report(p, custom), ValidationError);
}
