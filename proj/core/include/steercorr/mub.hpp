#pragma once

#include <array>

#include "steercorr/qstate.hpp"

namespace steercorr {

// A projective qubit measurement {Pi+, Pi-} = (I +- n.sigma)/2, identified
// by its unit Bloch direction n.
class QubitBasis {
 public:
  const Vector3& direction() const noexcept { return n_; }

  // outcome 0 -> Pi+, outcome 1 -> Pi-
  Matrix2c projector(int outcome) const;
  // Eigenvector of n.sigma for the given outcome (0 -> +1, 1 -> -1).
  Eigen::Vector2cd ket(int outcome) const;

 private:
  explicit QubitBasis(const Vector3& unit) : n_(unit) {}
  friend QubitBasis basis_from_direction(const Vector3& n);

  Vector3 n_;
};

// Normalizes n; throws ZeroVector when |n| == 0.
QubitBasis basis_from_direction(const Vector3& n);

// |<a_i^1 | a_j^2>| for i, j in {+, -}.
Eigen::Matrix2d unbiasedness_overlap(const QubitBasis& first, const QubitBasis& second);

// True iff every overlap equals 1/sqrt(2) within tol.
bool mutually_unbiased(const QubitBasis& first, const QubitBasis& second,
                       double tol = 1e-10);

inline constexpr double kUnbiasedTolerance = 1e-10;

class MubPair {
 public:
  // Throws NotUnbiased if the directions are not orthogonal.
  MubPair(const QubitBasis& first, const QubitBasis& second);

  const QubitBasis& first() const noexcept { return bases_[0]; }
  const QubitBasis& second() const noexcept { return bases_[1]; }
  const std::array<QubitBasis, 2>& bases() const noexcept { return bases_; }

 private:
  std::array<QubitBasis, 2> bases_;
};

// Three pairwise unbiased qubit bases. Qubits admit no more than three.
class MubTriad {
 public:
  MubTriad(const QubitBasis& first, const QubitBasis& second, const QubitBasis& third);

  const QubitBasis& operator[](int i) const { return bases_.at(static_cast<std::size_t>(i)); }
  const std::array<QubitBasis, 3>& bases() const noexcept { return bases_; }
  MubPair leading_pair() const { return MubPair(bases_[0], bases_[1]); }

 private:
  std::array<QubitBasis, 3> bases_;
};

// R_z(alpha) R_y(beta) R_z(gamma), acting on column vectors.
Matrix3 rotation_zyz(double alpha, double beta, double gamma);

// Columns of rotation_zyz(alpha, beta, gamma) as a triad of bases.
MubTriad frame_from_angles(double alpha, double beta, double gamma);

// Unit vector at polar angle theta and azimuth phi.
Vector3 direction_from_angles(double theta, double phi);

}  // namespace steercorr
