#include "steercorr/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steercorr/error.hpp"

namespace steercorr {

namespace pauli {

namespace {
const std::array<Matrix2c, 4>& table() {
  static const std::array<Matrix2c, 4> kTable = [] {
    const Complex i(0.0, 1.0);
    std::array<Matrix2c, 4> t;
    t[0] << 1.0, 0.0, 0.0, 1.0;
    t[1] << 0.0, 1.0, 1.0, 0.0;
    t[2] << 0.0, -i, i, 0.0;
    t[3] << 1.0, 0.0, 0.0, -1.0;
    return t;
  }();
  return kTable;
}
}  // namespace

const Matrix2c& identity() { return table()[0]; }

const Matrix2c& sigma(int i) { return table().at(static_cast<std::size_t>(i) + 1); }

Matrix2c dot(const Vector3& n) {
  return n.x() * sigma(0) + n.y() * sigma(1) + n.z() * sigma(2);
}

}  // namespace pauli

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::Vector4d DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double DensityMatrix::expectation(const Matrix4c& op) const {
  return (m_ * op).trace().real();
}

DensityMatrix validate_density_matrix(const Matrix4c& m) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tolerance::kHermitian) {
    throw Error(ErrorCode::NotHermitian,
                "max |M - M^dagger| = " + std::to_string(herm), herm);
  }
  const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_dev > tolerance::kTrace) {
    throw Error(ErrorCode::TraceNotOne,
                "|Tr M - 1| = " + std::to_string(trace_dev), trace_dev);
  }
  // Symmetrize so the eigensolver sees an exactly Hermitian matrix.
  const Matrix4c h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(h, Eigen::EigenvaluesOnly);
  const double lowest = solver.eigenvalues()(0);
  if (lowest < -tolerance::kPsd) {
    throw Error(ErrorCode::NotPositiveSemidefinite,
                "smallest eigenvalue = " + std::to_string(lowest), lowest);
  }
  return DensityMatrix(h);
}

CorrelationVector::CorrelationVector(double c1, double c2, double c3)
    : CorrelationVector(Vector3(c1, c2, c3)) {}

CorrelationVector::CorrelationVector(const Vector3& c) : c_(c) {
  if (!c_.allFinite()) {
    throw Error(ErrorCode::OutOfRange, "correlation vector is not finite");
  }
  const double largest = c_.cwiseAbs().maxCoeff();
  if (largest > 1.0 + tolerance::kPsd) {
    throw Error(ErrorCode::OutOfRange,
                "correlation component outside [-1, 1]: " +
                    std::to_string(largest),
                largest);
  }
}

std::array<double, 4> CorrelationVector::bell_eigenvalues() const {
  const double c1 = c_(0), c2 = c_(1), c3 = c_(2);
  return {(1.0 - c1 - c2 - c3) / 4.0, (1.0 - c1 + c2 + c3) / 4.0,
          (1.0 + c1 - c2 + c3) / 4.0, (1.0 + c1 + c2 - c3) / 4.0};
}

bool CorrelationVector::is_bell_admissible(double tol) const {
  const auto ev = bell_eigenvalues();
  return std::all_of(ev.begin(), ev.end(), [tol](double l) { return l >= -tol; });
}

void CorrelationVector::require_bell_admissible() const {
  const auto ev = bell_eigenvalues();
  const double lowest = *std::min_element(ev.begin(), ev.end());
  if (lowest < -tolerance::kPsd) {
    throw Error(ErrorCode::NotPositiveSemidefinite,
                "correlation vector outside the Bell-diagonal tetrahedron; "
                "smallest eigenvalue = " + std::to_string(lowest),
                lowest);
  }
}

Matrix4c BlochRepresentation::reassemble() const {
  const Matrix2c& id = pauli::identity();
  Matrix4c m = kron(id, id) + kron(pauli::dot(a), id) + kron(id, pauli::dot(b));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (T(i, j) != 0.0) m += T(i, j) * kron(pauli::sigma(i), pauli::sigma(j));
    }
  }
  return 0.25 * m;
}

BlochRepresentation bloch_decompose(const DensityMatrix& rho) {
  const Matrix2c& id = pauli::identity();
  BlochRepresentation out;
  for (int i = 0; i < 3; ++i) {
    out.a(i) = rho.expectation(kron(pauli::sigma(i), id));
    out.b(i) = rho.expectation(kron(id, pauli::sigma(i)));
    for (int j = 0; j < 3; ++j) {
      out.T(i, j) = rho.expectation(kron(pauli::sigma(i), pauli::sigma(j)));
    }
  }
  return out;
}

CanonicalForm canonical_form(const DensityMatrix& rho) {
  const BlochRepresentation bloch = bloch_decompose(rho);
  // Singular values come back sorted in decreasing order.
  Eigen::JacobiSVD<Matrix3> svd(bloch.T, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix3 u = svd.matrixU();
  Matrix3 v = svd.matrixV();
  Vector3 c = svd.singularValues();
  // Keep both frames proper; the sign lands on the smallest component.
  if (u.determinant() < 0.0) {
    u.col(2) *= -1.0;
    c(2) = -c(2);
  }
  if (v.determinant() < 0.0) {
    v.col(2) *= -1.0;
    c(2) = -c(2);
  }
  // Singular values of a valid state's T never exceed 1; trim round-off.
  for (int i = 0; i < 3; ++i) c(i) = std::clamp(c(i), -1.0, 1.0);
  return CanonicalForm{u.transpose() * bloch.a, v.transpose() * bloch.b,
                       CorrelationVector(c), u, v};
}

DensityMatrix bell_diagonal_from_c(const CorrelationVector& c) {
  BlochRepresentation bloch;
  bloch.T = c.values().asDiagonal();
  return validate_density_matrix(bloch.reassemble());
}

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "Werner weight p must lie in [0, 1]", p);
  }
  Vector4c singlet(0.0, 1.0, -1.0, 0.0);
  singlet /= std::sqrt(2.0);
  const Matrix4c m =
      p * singlet * singlet.adjoint() + (1.0 - p) * Matrix4c::Identity() / 4.0;
  return validate_density_matrix(m);
}

DensityMatrix product_state(const Vector3& a, const Vector3& b) {
  const Matrix2c rho_a = 0.5 * (pauli::identity() + pauli::dot(a));
  const Matrix2c rho_b = 0.5 * (pauli::identity() + pauli::dot(b));
  return validate_density_matrix(kron(rho_a, rho_b));
}

DensityMatrix pure_state(const Vector4c& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) {
    throw Error(ErrorCode::ZeroVector, "state vector has zero norm");
  }
  const Vector4c unit = psi / norm;
  return validate_density_matrix(unit * unit.adjoint());
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho,
                                    const Matrix2c& alice,
                                    const Matrix2c& bob) {
  const Matrix4c u = kron(alice, bob);
  return validate_density_matrix(u * rho.matrix() * u.adjoint());
}

std::optional<CorrelationVector> as_bell_diagonal(const DensityMatrix& rho,
                                                  double tol) {
  const BlochRepresentation bloch = bloch_decompose(rho);
  if (bloch.a.cwiseAbs().maxCoeff() > tol || bloch.b.cwiseAbs().maxCoeff() > tol) {
    return std::nullopt;
  }
  Matrix3 off = bloch.T;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return CorrelationVector(bloch.T.diagonal());
}

}  // namespace steercorr
