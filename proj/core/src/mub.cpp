#include "steercorr/mub.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steercorr/error.hpp"

namespace steercorr {

Matrix2c QubitBasis::projector(int outcome) const {
  const double sign = outcome == 0 ? 1.0 : -1.0;
  return 0.5 * (pauli::identity() + sign * pauli::dot(n_));
}

Eigen::Vector2cd QubitBasis::ket(int outcome) const {
  // Bloch-sphere parametrization; the global phase is irrelevant.
  const double theta = std::acos(std::clamp(n_.z(), -1.0, 1.0));
  const double phi = std::atan2(n_.y(), n_.x());
  const Complex phase = std::polar(1.0, phi);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Vector2cd v;
  if (outcome == 0) {
    v << c, phase * s;
  } else {
    v << -std::conj(phase) * s, c;
  }
  return v;
}

QubitBasis basis_from_direction(const Vector3& n) {
  const double norm = n.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::ZeroVector, "basis direction must be a nonzero finite vector");
  }
  return QubitBasis(n / norm);
}

Eigen::Matrix2d unbiasedness_overlap(const QubitBasis& first, const QubitBasis& second) {
  Eigen::Matrix2d out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = std::abs(first.ket(i).dot(second.ket(j)));
    }
  }
  return out;
}

bool mutually_unbiased(const QubitBasis& first, const QubitBasis& second, double tol) {
  const double target = 1.0 / std::sqrt(2.0);
  return ((unbiasedness_overlap(first, second).array() - target).abs() <= tol).all();
}

namespace {
void require_orthogonal(const QubitBasis& x, const QubitBasis& y) {
  const double d = x.direction().dot(y.direction());
  if (std::abs(d) > kUnbiasedTolerance) {
    throw Error(ErrorCode::NotUnbiased,
                "basis directions are not orthogonal, n1.n2 = " + std::to_string(d), d);
  }
}
}  // namespace

MubPair::MubPair(const QubitBasis& first, const QubitBasis& second)
    : bases_{first, second} {
  require_orthogonal(first, second);
}

MubTriad::MubTriad(const QubitBasis& first, const QubitBasis& second,
                   const QubitBasis& third)
    : bases_{first, second, third} {
  require_orthogonal(first, second);
  require_orthogonal(second, third);
  require_orthogonal(third, first);
}

Matrix3 rotation_zyz(double alpha, double beta, double gamma) {
  using Eigen::AngleAxisd;
  return (AngleAxisd(alpha, Vector3::UnitZ()) * AngleAxisd(beta, Vector3::UnitY()) *
          AngleAxisd(gamma, Vector3::UnitZ()))
      .toRotationMatrix();
}

MubTriad frame_from_angles(double alpha, double beta, double gamma) {
  const Matrix3 r = rotation_zyz(alpha, beta, gamma);
  return MubTriad(basis_from_direction(r.col(0)), basis_from_direction(r.col(1)),
                  basis_from_direction(r.col(2)));
}

Vector3 direction_from_angles(double theta, double phi) {
  return Vector3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                 std::cos(theta));
}

}  // namespace steercorr
