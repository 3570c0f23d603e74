#include <cmath>

#include "convexdom/verify.hpp"
#include "doctest.h"

using namespace convexdom;

TEST_CASE("report passes only when every check passes") {
  VerificationReport r;
  CHECK(r.passed());
  r.expect_true("ok", true);
  r.expect_below("tiny", 1e-12, 1e-8);
  CHECK(r.passed());
  r.expect_below("nan is never below", std::nan(""), 1.0);
  CHECK_FALSE(r.passed());
  CHECK(r.checks.back().status == CheckStatus::fail);
}

TEST_CASE("merge prefixes check names") {
  VerificationReport a, b;
  b.expect_above("margin", 0.5, 0.0);
  a.merge(b, "exp");
  REQUIRE(a.checks.size() == 1);
  CHECK(a.checks[0].name.find("exp") == 0);
}

TEST_CASE("single configuration run on a coarse grid") {
  ParamSet p;
  p.alpha = -1.0 / 3.0;
  p.beta = 0.5;
  p.gamma = 1.0;
  const auto run = verify_configuration(p, make_exp(1.0), DiskGrid::uniform(0.95, 12, 48));
  CHECK(run.report.passed());
  REQUIRE(run.report.convexity_margin_q);
  CHECK(*run.report.convexity_margin_q > 0.0);
  CHECK(run.report.chain_ok.value_or(false));
}

TEST_CASE("small property and exactness runs") {
  CHECK(run_exactness_suite(10, 3).passed());
  CHECK(run_property_suite(2, 5, DiskGrid::uniform(0.95, 12, 32)).passed());
}
