#include <doctest.h>

#include <cmath>
#include <numbers>

#include "steercorr/error.hpp"
#include "steercorr/sampling.hpp"
#include "steercorr/scmub.hpp"
#include "steercorr/verify.hpp"
#include "support/oracle.hpp"

using namespace steercorr;

TEST_CASE("c2_from_f2 and c3_from_f3") {
  CHECK(c2_from_f2(std::numbers::sqrt2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(c2_from_f2(0.0)) < 1e-15);
  CHECK(c2_from_f2(1.0) == doctest::Approx(0.399123963307144).epsilon(1e-12));
  CHECK(c3_from_f3(std::numbers::sqrt3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(c3_from_f3(0.0)) < 1e-15);
  CHECK(c3_from_f3(1.0) == doctest::Approx(0.255992448750999).epsilon(1e-12));

  CHECK_NOTHROW(c2_from_f2(std::numbers::sqrt2 + 5e-13));
  CHECK_THROWS_AS(c2_from_f2(1.5), Error);
  CHECK_THROWS_AS(c2_from_f2(-0.1), Error);
  CHECK_THROWS_AS(c3_from_f3(1.8), Error);
}

TEST_CASE("relation_residuals") {
  const SweepRecord bell = relation_residuals(CorrelationVector(1, -1, 1));
  CHECK(bell.residual_14 == 0.0);
  CHECK(bell.residual_17 == 0.0);
  CHECK(bell.S2 == doctest::Approx(1.0));
  const SweepRecord origin = relation_residuals(CorrelationVector(0, 0, 0));
  CHECK(origin.residual_14 < 1e-15);
  CHECK(origin.residual_17 < 1e-15);
  CHECK_THROWS_AS(relation_residuals(CorrelationVector(0.9, 0.9, 0.9)), Error);

  Rng rng(0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SweepRecord r = relation_residuals(sample_tetrahedron(rng));
    worst = std::max({worst, r.residual_14, r.residual_17});
    CHECK(r.residual_14 == doctest::Approx(std::abs(r.C2 - c2_from_f2(r.F2))));
  }
  CHECK(worst <= kIdentityTolerance);
}

TEST_CASE("vanishing chain C2 = 0 => F2 = 0 => S2 = 0") {
  const SweepRecord origin = relation_residuals(CorrelationVector(0, 0, 0));
  CHECK(origin.C2 < 1e-15);
  CHECK(origin.F2 == 0.0);
  CHECK(origin.S2 == 0.0);

  // Contrapositive on samples: F2 > 0 forces C2 > 0.
  Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    const SweepRecord r = relation_residuals(sample_tetrahedron(rng));
    if (r.F2 > 0.0) CHECK(r.C2 > 0.0);
  }
  // S2 = 0 does not force C2 = 0: Werner p = 0.5 is unsteerable but correlated.
  const SweepRecord w = relation_residuals(CorrelationVector(-0.5, -0.5, -0.5));
  CHECK(w.S2 == 0.0);
  CHECK(w.C2 > 0.1);
}

TEST_CASE("relations are increasing: finite differences against an analytic slope") {
  // d/dF [1 - h((1 + F/m)/2)] = (1/(2m)) log2((1+x)/(1-x)), x = F/m >= 0.
  for (double F : {0.1, 0.5, 0.9, 1.2}) {
    const double step = 1e-6;
    const double fd = (c2_from_f2(F + step) - c2_from_f2(F - step)) / (2 * step);
    const double x = F / std::numbers::sqrt2;
    const double slope = std::log2((1 + x) / (1 - x)) / (2 * std::numbers::sqrt2);
    CHECK(fd == doctest::Approx(slope).epsilon(1e-5));
    CHECK(slope > 0.0);
  }
}

TEST_CASE("monotonicity_scan") {
  const MonotonicityReport r = monotonicity_scan(100);
  CHECK(r.min_forward_diff_c2 > 0.0);
  CHECK(r.min_forward_diff_c3 > 0.0);
  CHECK(r.order.pairs_two_setting > 0);
  CHECK(r.order.violations.empty());
  CHECK_NOTHROW(monotonicity_scan(10));
  CHECK_THROWS_AS(monotonicity_scan(9), Error);
  CHECK(c2_from_f2(kF2Max) == doctest::Approx(1.0));
}

TEST_CASE("Werner pair 0.75 vs 0.9 orders S and C the same way") {
  const SweepRecord a = relation_residuals(CorrelationVector(-0.75, -0.75, -0.75));
  const SweepRecord b = relation_residuals(CorrelationVector(-0.9, -0.9, -0.9));
  CHECK(b.S2 > a.S2);
  CHECK(b.C2 > a.C2);
  CHECK(b.S3 > a.S3);
  CHECK(b.C3 > a.C3);
  const SweepRecord pair[] = {a, b};
  const OrderReport order = check_order_preservation(pair);
  CHECK(order.pairs_two_setting == 1);
  CHECK(order.violations.empty());
}

TEST_CASE("order check detects a fabricated inversion") {
  SweepRecord a = relation_residuals(CorrelationVector(-0.8, -0.8, -0.8));
  SweepRecord b = relation_residuals(CorrelationVector(-0.95, -0.95, -0.95));
  std::swap(a.C2, b.C2);
  const SweepRecord pair[] = {a, b};
  CHECK(check_order_preservation(pair).violations.size() == 1);
}

TEST_CASE("run_verification passes with default normalization") {
  VerifyConfig config;
  config.samples = 300;
  config.grid_size = 200;
  const VerificationSummary s = run_verification(config);
  CHECK(s.passed());
  CHECK(s.max_residual_14 <= 1e-12);
  CHECK(s.max_residual_17 <= 1e-12);
  CHECK(s.order_pairs_checked > 0);
}

TEST_CASE("negative control: a wrong F_max breaks S normalization, not monotonicity") {
  VerifyConfig config;
  config.samples = 100;
  config.grid_size = 50;
  config.normalization.f2_max = 2.0;
  const VerificationSummary s = run_verification(config);
  CHECK_FALSE(s.passed());
  CHECK_FALSE(s.monotonicity_violation);
  bool normalization_flagged = false;
  for (const auto& f : s.failures) normalization_flagged |= f.find("normalization") != std::string::npos;
  CHECK(normalization_flagged);
}

TEST_CASE("numeric fields can ride along on a record") {
  const CorrelationVector c(0.6, -0.4, 0.2);
  SweepRecord r = relation_residuals(c);
  r.C2_numeric = c2_numeric(bell_diagonal_from_c(c)).value;
  CHECK(std::abs(*r.C2_numeric - r.C2) <= 1e-4);
}
