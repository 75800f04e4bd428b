#include "steercorr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "steercorr/error.hpp"
#include "steercorr/infotheory.hpp"
#include "steercorr/sampling.hpp"
#include "steercorr/scmub.hpp"

namespace steercorr {

namespace {

constexpr double kSlack = 1e-12;

double relation(double F, double f_max) {
  if (!(F >= -kSlack && F <= f_max + kSlack)) {
    std::ostringstream msg;
    msg << "F = " << F << " outside [0, " << f_max << "]";
    throw Error(ErrorCode::OutOfDomain, msg.str(), F);
  }
  return 1.0 - binary_entropy((1.0 + std::max(F, 0.0) / f_max) / 2.0);
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

void compare_chain(const SweepRecord& a, const SweepRecord& b, double Fa, double Fb,
                   double Sa, double Sb, double Ca, double Cb, const char* label,
                   std::size_t& counter, std::vector<std::string>& violations) {
  if (Fa <= 1.0 || Fb <= 1.0) return;
  if (std::abs(Fa - Fb) < 1e-12) return;
  ++counter;
  if (sign(Sa - Sb) != sign(Ca - Cb)) {
    std::ostringstream msg;
    msg << label << " order mismatch between c=(" << a.c[0] << "," << a.c[1] << "," << a.c[2]
        << ") and c=(" << b.c[0] << "," << b.c[1] << "," << b.c[2] << ")";
    violations.push_back(msg.str());
  }
}

}  // namespace

double c2_from_f2(double F2) { return relation(F2, kF2Max); }

double c3_from_f3(double F3) { return relation(F3, kF3Max); }

SweepRecord relation_residuals(const CorrelationVector& c, const Normalization& norm) {
  SweepRecord r;
  r.c = c;
  r.C2 = c2_closed(c);
  r.C3 = c3_closed(c);
  r.F2 = f2_closed(c);
  r.F3 = f3_closed(c);
  r.S2 = steering_measure_with_max(r.F2, norm.f2_max);
  r.S3 = steering_measure_with_max(r.F3, norm.f3_max);
  r.residual_14 = std::abs(r.C2 - c2_from_f2(r.F2));
  r.residual_17 = std::abs(r.C3 - c3_from_f3(r.F3));
  return r;
}

OrderReport check_order_preservation(std::span<const SweepRecord> records) {
  OrderReport report;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      const SweepRecord& a = records[i];
      const SweepRecord& b = records[j];
      compare_chain(a, b, a.F2, b.F2, a.S2, b.S2, a.C2, b.C2, "two-setting",
                    report.pairs_two_setting, report.violations);
      compare_chain(a, b, a.F3, b.F3, a.S3, b.S3, a.C3, b.C3, "three-setting",
                    report.pairs_three_setting, report.violations);
    }
  }
  return report;
}

MonotonicityReport monotonicity_scan(int grid_size, const Normalization& norm) {
  if (grid_size < 10) {
    throw Error(ErrorCode::OutOfRange, "monotonicity grid needs at least 10 points", grid_size);
  }
  MonotonicityReport report;
  report.grid_size = grid_size;
  report.min_forward_diff_c2 = std::numeric_limits<double>::infinity();
  report.min_forward_diff_c3 = std::numeric_limits<double>::infinity();

  std::vector<std::string> violations;
  std::vector<SweepRecord> grid_records;
  grid_records.reserve(static_cast<std::size_t>(grid_size) * 2);

  const auto scan = [&](double f_max, double (*relation_fn)(double), double& min_diff,
                        const char* label, bool two_setting) {
    double prev = relation_fn(0.0);
    for (int i = 0; i < grid_size; ++i) {
      // The last point is pinned to f_max so the endpoint is exact.
      const double F = i + 1 == grid_size ? f_max
                                          : f_max * static_cast<double>(i) / (grid_size - 1);
      const double value = relation_fn(F);
      if (i > 0) {
        const double diff = value - prev;
        min_diff = std::min(min_diff, diff);
        if (diff < -kSlack) {
          std::ostringstream msg;
          msg << label << " decreases between grid points " << i - 1 << " and " << i
              << " (F = " << F << ", difference " << diff << ")";
          violations.push_back(msg.str());
        }
      }
      prev = value;
      SweepRecord r;
      if (two_setting) {
        r.F2 = F;
        r.S2 = steering_measure_with_max(F, norm.f2_max);
        r.C2 = value;
      } else {
        r.F3 = F;
        r.S3 = steering_measure_with_max(F, norm.f3_max);
        r.C3 = value;
      }
      grid_records.push_back(r);
    }
  };
  scan(kF2Max, &c2_from_f2, report.min_forward_diff_c2, "c2_from_f2", true);
  scan(kF3Max, &c3_from_f3, report.min_forward_diff_c3, "c3_from_f3", false);

  report.order = check_order_preservation(grid_records);
  violations.insert(violations.end(), report.order.violations.begin(),
                    report.order.violations.end());
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << violations.size() << " violation(s); first: " << violations.front();
    throw Error(ErrorCode::MonotonicityViolation, msg.str(),
                static_cast<double>(violations.size()));
  }
  return report;
}

std::vector<std::string> normalization_violations(std::span<const SweepRecord> records,
                                                  const Normalization& norm) {
  std::vector<std::string> out;
  const SweepRecord bell = relation_residuals(CorrelationVector(1.0, -1.0, 1.0), norm);
  if (std::abs(bell.S2 - 1.0) > 1e-9) {
    out.push_back("S2 at the Bell state is " + std::to_string(bell.S2) + ", expected 1");
  }
  if (std::abs(bell.S3 - 1.0) > 1e-9) {
    out.push_back("S3 at the Bell state is " + std::to_string(bell.S3) + ", expected 1");
  }
  for (const SweepRecord& r : records) {
    if (r.S2 < 0.0 || r.S2 > 1.0 + 1e-9 || r.S3 < 0.0 || r.S3 > 1.0 + 1e-9) {
      out.push_back("S outside [0, 1] at a sampled state");
      break;
    }
  }
  return out;
}

VerificationSummary run_verification(const VerifyConfig& config) {
  VerificationSummary summary;
  summary.samples = config.samples;
  summary.grid_size = config.grid_size;

  Rng rng(config.seed);
  std::vector<SweepRecord> records;
  records.reserve(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) {
    records.push_back(relation_residuals(sample_tetrahedron(rng), config.normalization));
    summary.max_residual_14 = std::max(summary.max_residual_14, records.back().residual_14);
    summary.max_residual_17 = std::max(summary.max_residual_17, records.back().residual_17);
  }
  if (summary.max_residual_14 > kIdentityTolerance) {
    summary.failures.push_back("two-setting relation residual " +
                               std::to_string(summary.max_residual_14) + " exceeds 1e-12");
  }
  if (summary.max_residual_17 > kIdentityTolerance) {
    summary.failures.push_back("three-setting relation residual " +
                               std::to_string(summary.max_residual_17) + " exceeds 1e-12");
  }

  try {
    const MonotonicityReport mono = monotonicity_scan(config.grid_size, config.normalization);
    summary.min_forward_diff_c2 = mono.min_forward_diff_c2;
    summary.min_forward_diff_c3 = mono.min_forward_diff_c3;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MonotonicityViolation) throw;
    summary.monotonicity_violation = true;
    summary.failures.emplace_back(e.what());
  }

  const OrderReport order = check_order_preservation(records);
  summary.order_pairs_checked = order.pairs_two_setting + order.pairs_three_setting;
  if (!order.violations.empty()) {
    summary.failures.push_back(std::to_string(order.violations.size()) +
                               " order violations on sampled states; first: " +
                               order.violations.front());
  }

  for (auto& msg : normalization_violations(records, config.normalization)) {
    summary.failures.push_back("S normalization: " + msg);
  }
  return summary;
}

}  // namespace steercorr
