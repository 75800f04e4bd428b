#include "steercorr/steering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "steercorr/error.hpp"
#include "steercorr/mub.hpp"

namespace steercorr {

double cjwr_max_value(int n) {
  switch (n) {
    case 2: return kF2Max;
    case 3: return kF3Max;
    default:
      throw Error(ErrorCode::OutOfRange, "setting count must be 2 or 3, got " + std::to_string(n), n);
  }
}

MeasurementSettings::MeasurementSettings(std::vector<Vector3> alice, std::vector<Vector3> bob)
    : alice_(std::move(alice)), bob_(std::move(bob)) {
  if (alice_.size() != bob_.size() || alice_.size() < 2 || alice_.size() > 3) {
    throw Error(ErrorCode::InvalidSettings, "need 2 or 3 (alice, bob) direction pairs");
  }
  auto check_unit = [](const Vector3& v) {
    const double dev = std::abs(v.norm() - 1.0);
    if (!(dev <= 1e-12)) {
      throw Error(ErrorCode::InvalidSettings, "direction is not unit norm", dev);
    }
  };
  for (const auto& v : alice_) check_unit(v);
  for (const auto& v : bob_) check_unit(v);
  for (std::size_t i = 0; i < bob_.size(); ++i) {
    for (std::size_t j = i + 1; j < bob_.size(); ++j) {
      const double d = bob_[i].dot(bob_[j]);
      if (std::abs(d) > 1e-10) {
        throw Error(ErrorCode::InvalidSettings, "Bob's directions must be orthogonal", d);
      }
    }
  }
}

double cjwr_value(const DensityMatrix& rho, const MeasurementSettings& settings) {
  double sum = 0.0;
  for (int k = 0; k < settings.n(); ++k) {
    sum += rho.expectation(kron(pauli::dot(settings.alice()[k]), pauli::dot(settings.bob()[k])));
  }
  return std::abs(sum) / std::sqrt(static_cast<double>(settings.n()));
}

double cjwr_value(const Matrix3& T, const MeasurementSettings& settings) {
  double sum = 0.0;
  for (int k = 0; k < settings.n(); ++k) sum += settings.alice()[k].dot(T * settings.bob()[k]);
  return std::abs(sum) / std::sqrt(static_cast<double>(settings.n()));
}

namespace {

// Layout: (alpha, beta, gamma) for Bob's frame, then (theta_k, phi_k) per
// Alice direction.
MeasurementSettings settings_from_parameters(const Eigen::VectorXd& x, int n) {
  const Matrix3 frame = rotation_zyz(x(0), x(1), x(2));
  std::vector<Vector3> alice;
  std::vector<Vector3> bob;
  for (int k = 0; k < n; ++k) {
    alice.push_back(direction_from_angles(x(3 + 2 * k), x(4 + 2 * k)));
    bob.push_back(frame.col(k));
  }
  return MeasurementSettings(std::move(alice), std::move(bob));
}

}  // namespace

SteeringReport cjwr_maximize(const DensityMatrix& rho, int n, const SteeringOptions& options) {
  const double f_max = cjwr_max_value(n);
  const Matrix3 T = bloch_decompose(rho).T;
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));

  const auto objective = [&T, n, norm](const Eigen::VectorXd& x) {
    const Matrix3 frame = rotation_zyz(x(0), x(1), x(2));
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      sum += direction_from_angles(x(3 + 2 * k), x(4 + 2 * k)).dot(T * frame.col(k));
    }
    return norm * std::abs(sum);
  };

  const Eigen::Index dim = 3 + 2 * n;
  Eigen::VectorXd lower = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd upper(dim);
  const double two_pi = 2.0 * std::numbers::pi;
  upper.head<3>() << two_pi, std::numbers::pi, two_pi;
  for (int k = 0; k < n; ++k) {
    upper(3 + 2 * k) = std::numbers::pi;
    upper(4 + 2 * k) = two_pi;
  }

  const MultiStartResult found = multistart_maximize(objective, lower, upper, options.search);
  SteeringReport report;
  report.n = n;
  report.F = found.best.value;
  report.S = steering_measure_with_max(report.F, f_max);
  report.optimal_settings = settings_from_parameters(found.best.x, n);
  return report;
}

double f2_closed(const CorrelationVector& c) {
  const double c_min = c.min_abs();
  return std::sqrt(std::max(c.norm_squared() - c_min * c_min, 0.0));
}

double f3_closed(const CorrelationVector& c) { return c.norm(); }

double steering_measure_with_max(double F, double f_max) {
  if (!(F >= 0.0)) {
    throw Error(ErrorCode::OutOfDomain, "CJWR value must be non-negative", F);
  }
  return std::max(0.0, (F - 1.0) / (f_max - 1.0));
}

double steering_measure(double F, int n) {
  return steering_measure_with_max(F, cjwr_max_value(n));
}

SteeringReport steering_closed(const CorrelationVector& c, int n) {
  const double f_max = cjwr_max_value(n);
  SteeringReport report;
  report.n = n;
  report.F = n == 2 ? f2_closed(c) : f3_closed(c);
  report.S = steering_measure_with_max(report.F, f_max);
  return report;
}

}  // namespace steercorr
