#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "steercorr/optimize.hpp"
#include "steercorr/qstate.hpp"

namespace steercorr {

// Largest CJWR values over all two-qubit states, attained by Bell states.
inline constexpr double kF2Max = std::numbers::sqrt2;
inline constexpr double kF3Max = std::numbers::sqrt3;

// Throws OutOfRange unless n is 2 or 3.
double cjwr_max_value(int n);

// n dichotomic observables a_k.sigma for Alice and b_k.sigma for Bob. Bob's
// directions are mutually orthogonal; this is the setting in which the CJWR
// bound F_n <= 1 holds for unsteerable states.
class MeasurementSettings {
 public:
  // Throws InvalidSettings for n outside {2, 3}, mismatched sizes, non-unit
  // directions (1e-12) or non-orthogonal Bob directions (1e-10).
  MeasurementSettings(std::vector<Vector3> alice, std::vector<Vector3> bob);

  int n() const noexcept { return static_cast<int>(alice_.size()); }
  const std::vector<Vector3>& alice() const noexcept { return alice_; }
  const std::vector<Vector3>& bob() const noexcept { return bob_; }

 private:
  std::vector<Vector3> alice_;
  std::vector<Vector3> bob_;
};

// (1/sqrt n) |sum_k Tr(rho (a_k.sigma (x) b_k.sigma))|
double cjwr_value(const DensityMatrix& rho, const MeasurementSettings& settings);

// Same functional evaluated through the correlation matrix: sum_k a_k^T T b_k.
double cjwr_value(const Matrix3& T, const MeasurementSettings& settings);

struct SteeringReport {
  int n = 0;
  double F = 0.0;
  double S = 0.0;
  std::optional<MeasurementSettings> optimal_settings;
};

struct SteeringOptions {
  MultiStartOptions search{.restarts = 32, .seed = 0, .spread_tolerance = 1e-5, .local = {}};
};

// Maximizes cjwr_value over Alice's directions (two angles each) and Bob's
// orthonormal frame (three Euler angles). Throws ConvergenceFailure.
SteeringReport cjwr_maximize(const DensityMatrix& rho, int n,
                             const SteeringOptions& options = {});

// sqrt(c^2 - c_min^2)
double f2_closed(const CorrelationVector& c);
// |c|
double f3_closed(const CorrelationVector& c);

// max{0, (F - 1)/(F_max - 1)}
double steering_measure(double F, int n);
double steering_measure_with_max(double F, double f_max);

// F_n and S_n for any two-qubit state from its canonical correlation vector.
SteeringReport steering_closed(const CorrelationVector& c, int n);

}  // namespace steercorr
