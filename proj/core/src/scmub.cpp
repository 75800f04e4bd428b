#include "steercorr/scmub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "steercorr/error.hpp"
#include "steercorr/infotheory.hpp"
#include "steercorr/mub.hpp"

namespace steercorr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> holevo_per_basis(const DensityMatrix& rho, const std::vector<Vector3>& dirs) {
  std::vector<double> out;
  out.reserve(dirs.size());
  for (const auto& d : dirs) out.push_back(holevo(rho, basis_from_direction(d)));
  return out;
}

std::vector<Vector3> frame_directions(const Eigen::VectorXd& angles, int count) {
  const MubTriad triad = frame_from_angles(angles(0), angles(1), angles(2));
  std::vector<Vector3> dirs;
  for (int k = 0; k < count; ++k) dirs.push_back(triad[k].direction());
  return dirs;
}

ScmubReport frame_search(const DensityMatrix& rho, int count, const MultiStartOptions& search) {
  const auto objective = [&rho, count](const Eigen::VectorXd& x) {
    const auto chi = holevo_per_basis(rho, frame_directions(x, count));
    return *std::min_element(chi.begin(), chi.end());
  };
  const Eigen::Vector3d lower = Eigen::Vector3d::Zero();
  const Eigen::Vector3d upper(kTwoPi, std::numbers::pi, kTwoPi);
  const MultiStartResult found = multistart_maximize(objective, lower, upper, search);

  ScmubReport report;
  report.parameters.assign(found.best.x.data(), found.best.x.data() + found.best.x.size());
  report.directions = frame_directions(found.best.x, count);
  report.per_basis_holevo = holevo_per_basis(rho, report.directions);
  report.value = *std::min_element(report.per_basis_holevo.begin(), report.per_basis_holevo.end());
  return report;
}

double one_minus_h_of_half(double r) { return 1.0 - binary_entropy((1.0 + r) / 2.0); }

}  // namespace

ScmubReport c1_numeric(const DensityMatrix& rho, const MultiStartOptions& search) {
  const auto objective = [&rho](const Eigen::VectorXd& x) {
    return holevo(rho, basis_from_direction(direction_from_angles(x(0), x(1))));
  };
  const Eigen::Vector2d lower = Eigen::Vector2d::Zero();
  const Eigen::Vector2d upper(std::numbers::pi, kTwoPi);
  const MultiStartResult found = multistart_maximize(objective, lower, upper, search);

  ScmubReport report;
  report.parameters = {found.best.x(0), found.best.x(1)};
  report.directions = {direction_from_angles(found.best.x(0), found.best.x(1))};
  report.per_basis_holevo = holevo_per_basis(rho, report.directions);
  report.value = report.per_basis_holevo.front();
  return report;
}

ScmubReport c2_numeric(const DensityMatrix& rho, const MultiStartOptions& search) {
  return frame_search(rho, 2, search);
}

ScmubReport c3_numeric(const DensityMatrix& rho, const MultiStartOptions& search) {
  return frame_search(rho, 3, search);
}

double c2_closed(const CorrelationVector& c) {
  c.require_bell_admissible();
  const double c_min = c.min_abs();
  const double arg = (c.norm_squared() - c_min * c_min) / 2.0;
  if (arg < -1e-12) {
    throw Error(ErrorCode::DomainError, "negative radicand " + std::to_string(arg), arg);
  }
  return one_minus_h_of_half(std::sqrt(std::max(arg, 0.0)));
}

double c3_closed(const CorrelationVector& c) {
  c.require_bell_admissible();
  return one_minus_h_of_half(c.norm() / std::numbers::sqrt3);
}

}  // namespace steercorr
