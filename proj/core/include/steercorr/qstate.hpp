#pragma once

#include <array>
#include <complex>
#include <optional>

#include <Eigen/Dense>

namespace steercorr {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;
using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

namespace tolerance {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-9;
}  // namespace tolerance

namespace pauli {
const Matrix2c& identity();
// i = 0, 1, 2 selects sigma_x, sigma_y, sigma_z.
const Matrix2c& sigma(int i);
// n . sigma for a real 3-vector n.
Matrix2c dot(const Vector3& n);
}  // namespace pauli

// Kronecker product A (x) B in the |00>,|01>,|10>,|11> ordering (Alice first).
Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

// A two-qubit state: Hermitian, unit trace, positive semidefinite. Instances
// only come out of validate_density_matrix, so holding one means the
// invariants were checked.
class DensityMatrix {
 public:
  const Matrix4c& matrix() const noexcept { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  // Ascending eigenvalues.
  Eigen::Vector4d eigenvalues() const;
  // Re Tr(rho * op).
  double expectation(const Matrix4c& op) const;

 private:
  explicit DensityMatrix(const Matrix4c& m) : m_(m) {}
  friend DensityMatrix validate_density_matrix(const Matrix4c& m);

  Matrix4c m_;
};

// Throws Error{NotHermitian | TraceNotOne | NotPositiveSemidefinite}; the
// error magnitude is the measured violation.
DensityMatrix validate_density_matrix(const Matrix4c& m);

// Diagonal correlations (c1, c2, c3) of the canonical two-qubit form.
class CorrelationVector {
 public:
  CorrelationVector() = default;
  CorrelationVector(double c1, double c2, double c3);
  explicit CorrelationVector(const Vector3& c);

  double operator[](int i) const { return c_[i]; }
  const Vector3& values() const noexcept { return c_; }

  // |c|
  double norm() const { return c_.norm(); }
  double norm_squared() const { return c_.squaredNorm(); }
  // min(|c1|, |c2|, |c3|)
  double min_abs() const { return c_.cwiseAbs().minCoeff(); }

  // Closed-form spectrum of the Bell-diagonal state built from c: weights on
  // (Psi-, Phi-, Phi+, Psi+).
  std::array<double, 4> bell_eigenvalues() const;
  bool is_bell_admissible(double tol = tolerance::kPsd) const;
  // Throws NotPositiveSemidefinite when c is outside the tetrahedron.
  void require_bell_admissible() const;

 private:
  Vector3 c_ = Vector3::Zero();
};

struct BlochRepresentation {
  Vector3 a = Vector3::Zero();
  Vector3 b = Vector3::Zero();
  Matrix3 T = Matrix3::Zero();

  // 1/4 (I(x)I + a.s(x)I + I(x)b.s + sum_ij T_ij s_i(x)s_j)
  Matrix4c reassemble() const;
};

BlochRepresentation bloch_decompose(const DensityMatrix& rho);

// Local-unitary canonical form: T = alice_rotation * diag(c) *
// bob_rotation^T with both rotations in SO(3). a and b are expressed in the
// rotated frames.
struct CanonicalForm {
  Vector3 a;
  Vector3 b;
  CorrelationVector c;
  Matrix3 alice_rotation;
  Matrix3 bob_rotation;
};

CanonicalForm canonical_form(const DensityMatrix& rho);

DensityMatrix bell_diagonal_from_c(const CorrelationVector& c);

// p |psi-><psi-| + (1 - p) I/4, p in [0, 1].
DensityMatrix werner(double p);

// Product of two single-qubit states with Bloch vectors a and b.
DensityMatrix product_state(const Vector3& a, const Vector3& b);

// |psi><psi| after normalization.
DensityMatrix pure_state(const Vector4c& psi);

// (U_A (x) U_B) rho (U_A (x) U_B)^dagger
DensityMatrix apply_local_unitaries(const DensityMatrix& rho,
                                    const Matrix2c& alice,
                                    const Matrix2c& bob);

// Returns c when rho has vanishing local Bloch vectors and diagonal T.
std::optional<CorrelationVector> as_bell_diagonal(const DensityMatrix& rho,
                                                  double tol = 1e-10);

}  // namespace steercorr
