#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steercorr/qstate.hpp"
#include "steercorr/steering.hpp"

namespace steercorr {

// 1 - h((1 + F2/sqrt 2)/2); throws OutOfDomain outside [0, sqrt 2] (1e-12 slack).
double c2_from_f2(double F2);
// 1 - h((1 + F3/sqrt 3)/2); throws OutOfDomain outside [0, sqrt 3] (1e-12 slack).
double c3_from_f3(double F3);

// Normalization constants used to turn F into S. Anything other than the
// defaults is a deliberately broken configuration for negative controls.
struct Normalization {
  double f2_max = kF2Max;
  double f3_max = kF3Max;
};

struct SweepRecord {
  CorrelationVector c;
  double F2 = 0.0;
  double F3 = 0.0;
  double S2 = 0.0;
  double S3 = 0.0;
  double C2 = 0.0;
  double C3 = 0.0;
  std::optional<double> C2_numeric;
  std::optional<double> C3_numeric;
  // |C2 - c2_from_f2(F2)| and |C3 - c3_from_f3(F3)|
  double residual_14 = 0.0;
  double residual_17 = 0.0;
};

inline constexpr double kIdentityTolerance = 1e-12;

// Closed-form F, S, C for a Bell-diagonal c plus the two relation residuals.
// Throws NotPositiveSemidefinite for c outside the tetrahedron.
SweepRecord relation_residuals(const CorrelationVector& c, const Normalization& norm = {});

struct OrderReport {
  std::size_t pairs_two_setting = 0;
  std::size_t pairs_three_setting = 0;
  std::vector<std::string> violations;
};

// For every pair of records that are both steerable (F > 1), checks that S
// and C are ordered the same way. Pairs whose F differ by less than 1e-12
// count as ties and are skipped.
OrderReport check_order_preservation(std::span<const SweepRecord> records);

struct MonotonicityReport {
  int grid_size = 0;
  double min_forward_diff_c2 = 0.0;
  double min_forward_diff_c3 = 0.0;
  OrderReport order;
};

// Scans c2_from_f2 on [0, sqrt 2] and c3_from_f3 on [0, sqrt 3] with
// grid_size points each; forward differences must be >= -1e-12 and S/C order
// must agree on the steerable grid points. Throws MonotonicityViolation
// naming the offending points, OutOfRange for grid_size < 10.
MonotonicityReport monotonicity_scan(int grid_size, const Normalization& norm = {});

// S must reach exactly 1 at the Bell state and stay inside [0, 1] on the
// supplied records. Returns one message per violated condition.
std::vector<std::string> normalization_violations(std::span<const SweepRecord> records,
                                                  const Normalization& norm = {});

struct VerifyConfig {
  std::size_t samples = 1000;
  int grid_size = 1000;
  std::uint64_t seed = 0;
  Normalization normalization;
};

struct VerificationSummary {
  std::size_t samples = 0;
  int grid_size = 0;
  double max_residual_14 = 0.0;
  double max_residual_17 = 0.0;
  double min_forward_diff_c2 = 0.0;
  double min_forward_diff_c3 = 0.0;
  std::size_t order_pairs_checked = 0;
  bool monotonicity_violation = false;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Relation identities on random tetrahedron samples, the monotonicity scan,
// order preservation on the sampled steerable states, and S normalization.
VerificationSummary run_verification(const VerifyConfig& config);

}  // namespace steercorr
