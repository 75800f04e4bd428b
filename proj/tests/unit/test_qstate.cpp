#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "steercorr/error.hpp"
#include "steercorr/qstate.hpp"
#include "steercorr/sampling.hpp"
#include "support/oracle.hpp"

using namespace steercorr;

namespace {

Vector4c bell_phi_plus() {
  return Vector4c(1.0, 0.0, 0.0, 1.0) / std::sqrt(2.0);
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected steercorr::Error");
  return ErrorCode::ParseError;
}

Vector3 sorted_abs(const CorrelationVector& c) {
  Vector3 v = c.values().cwiseAbs();
  std::sort(v.data(), v.data() + 3);
  return v;
}

}  // namespace

TEST_CASE("validate_density_matrix accepts states") {
  const DensityMatrix mixed = validate_density_matrix(Matrix4c::Identity() / 4.0);
  CHECK((mixed.eigenvalues().array() - 0.25).abs().maxCoeff() < 1e-12);

  const DensityMatrix pure = pure_state(bell_phi_plus());
  const Eigen::Vector4d ev = pure.eigenvalues();
  CHECK(ev(3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(ev(0)) < 1e-12);
}

TEST_CASE("validate_density_matrix names the violated invariant") {
  Matrix4c negative = Matrix4c::Zero();
  negative.diagonal() << 0.5, 0.6, -0.05, -0.05;
  try {
    validate_density_matrix(negative);
    FAIL("should throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveSemidefinite);
    CHECK(e.magnitude() == doctest::Approx(-0.05));
  }

  Matrix4c trace2 = Matrix4c::Identity() / 2.0;
  CHECK(code_of([&] { validate_density_matrix(trace2); }) == ErrorCode::TraceNotOne);

  Matrix4c skew = Matrix4c::Identity() / 4.0;
  skew(0, 1) = 0.1;
  CHECK(code_of([&] { validate_density_matrix(skew); }) == ErrorCode::NotHermitian);
}

TEST_CASE("bell_diagonal_from_c") {
  const DensityMatrix vertex = bell_diagonal_from_c(CorrelationVector(1.0, -1.0, 1.0));
  const Matrix4c phi = bell_phi_plus() * bell_phi_plus().adjoint();
  CHECK((vertex.matrix() - phi).cwiseAbs().maxCoeff() < 1e-12);

  const DensityMatrix origin = bell_diagonal_from_c(CorrelationVector(0.0, 0.0, 0.0));
  CHECK((origin.matrix() - Matrix4c::Identity() / 4.0).cwiseAbs().maxCoeff() < 1e-15);

  // Smallest eigenvalue of the assembled matrix is (1 - 2.7)/4.
  try {
    bell_diagonal_from_c(CorrelationVector(0.9, 0.9, 0.9));
    FAIL("should throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveSemidefinite);
    CHECK(e.magnitude() == doctest::Approx((1.0 - 2.7) / 4.0).epsilon(1e-9));
  }
}

TEST_CASE("bloch_decompose matches the explicit Pauli trace oracle") {
  const DensityMatrix phi = pure_state(bell_phi_plus());
  const Vector4c ket01(0.0, 1.0, 0.0, 0.0);
  const DensityMatrix prod = pure_state(ket01);
  const DensityMatrix half = werner(0.5);

  for (const DensityMatrix* rho : {&phi, &prod, &half}) {
    const BlochRepresentation b = bloch_decompose(*rho);
    for (int i = 0; i < 3; ++i) {
      CHECK(b.a(i) == doctest::Approx(oracle::pauli_trace(rho->matrix(), i + 1, 0)));
      CHECK(b.b(i) == doctest::Approx(oracle::pauli_trace(rho->matrix(), 0, i + 1)));
      for (int j = 0; j < 3; ++j) {
        CHECK(b.T(i, j) == doctest::Approx(oracle::pauli_trace(rho->matrix(), i + 1, j + 1)));
      }
    }
    CHECK((b.reassemble() - rho->matrix()).cwiseAbs().maxCoeff() < 1e-10);
  }

  const BlochRepresentation b_phi = bloch_decompose(phi);
  CHECK(b_phi.a.norm() < 1e-12);
  CHECK((b_phi.T - Vector3(1.0, -1.0, 1.0).asDiagonal().toDenseMatrix()).norm() < 1e-12);

  const BlochRepresentation b_prod = bloch_decompose(prod);
  CHECK((b_prod.a - Vector3(0, 0, 1)).norm() < 1e-12);
  CHECK((b_prod.b - Vector3(0, 0, -1)).norm() < 1e-12);
  CHECK(b_prod.T(2, 2) == doctest::Approx(-1.0));

  const BlochRepresentation b_half = bloch_decompose(half);
  CHECK((b_half.T - Matrix3::Identity() * -0.5).norm() < 1e-12);

  const BlochRepresentation b_mixed = bloch_decompose(validate_density_matrix(Matrix4c::Identity() / 4.0));
  CHECK(b_mixed.T.norm() < 1e-15);
}

TEST_CASE("werner family") {
  CHECK((werner(0.0).matrix() - Matrix4c::Identity() / 4.0).norm() < 1e-15);
  const CanonicalForm singlet = canonical_form(werner(1.0));
  CHECK(sorted_abs(singlet.c).isApprox(Vector3::Ones(), 1e-12));
  CHECK(bloch_decompose(werner(1.0)).T.isApprox(-Matrix3::Identity(), 1e-12));
  CHECK(code_of([] { werner(1.2); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { werner(-0.1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("canonical_form convention") {
  // Already diagonal: magnitudes sorted descending, sign product preserved.
  const CanonicalForm cf = canonical_form(bell_diagonal_from_c(CorrelationVector(0.5, -0.3, 0.1)));
  CHECK(std::abs(cf.c[0]) == doctest::Approx(0.5));
  CHECK(std::abs(cf.c[1]) == doctest::Approx(0.3));
  CHECK(std::abs(cf.c[2]) == doctest::Approx(0.1));
  CHECK(cf.c[0] * cf.c[1] * cf.c[2] == doctest::Approx(0.5 * -0.3 * 0.1));
  CHECK(cf.c[0] > 0.0);
  CHECK(cf.c[1] > 0.0);
  CHECK(cf.alice_rotation.determinant() == doctest::Approx(1.0));
  CHECK(cf.bob_rotation.determinant() == doctest::Approx(1.0));

  // Product states have rank-one T = a b^T.
  const CanonicalForm prod = canonical_form(product_state(Vector3(1, 0, 0), Vector3(0, 0, 1)));
  CHECK(sorted_abs(prod.c).isApprox(Vector3(0, 0, 1), 1e-12));
}

TEST_CASE("canonical_form reproduces T and is a local-unitary invariant") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const CorrelationVector c = sample_tetrahedron(rng);
    const DensityMatrix tau = bell_diagonal_from_c(c);
    const DensityMatrix rho = apply_local_unitaries(tau, random_unitary(rng), random_unitary(rng));
    const CanonicalForm cf = canonical_form(rho);
    CHECK((sorted_abs(cf.c) - sorted_abs(c)).cwiseAbs().maxCoeff() < 1e-8);

    const Matrix3 T = bloch_decompose(rho).T;
    const Matrix3 rebuilt = cf.alice_rotation * cf.c.values().asDiagonal() * cf.bob_rotation.transpose();
    CHECK((rebuilt - T).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("local rotation of a generic state preserves canonical magnitudes") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = pure_state(random_pure_vector(rng));
    const DensityMatrix rotated = apply_local_unitaries(rho, random_unitary(rng), random_unitary(rng));
    CHECK((sorted_abs(canonical_form(rho).c) - sorted_abs(canonical_form(rotated).c))
              .cwiseAbs()
              .maxCoeff() < 1e-8);
  }
}

TEST_CASE("tetrahedron interior: closed-form spectrum and Bloch round trip") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const CorrelationVector c = sample_tetrahedron(rng);
    REQUIRE(c.is_bell_admissible());
    CHECK(c.norm_squared() <= 3.0);
    const DensityMatrix rho = bell_diagonal_from_c(c);
    const BlochRepresentation b = bloch_decompose(rho);
    CHECK(b.a.norm() < 1e-10);
    CHECK(b.b.norm() < 1e-10);
    CHECK((b.T - Matrix3(c.values().asDiagonal())).cwiseAbs().maxCoeff() < 1e-10);

    auto expected = c.bell_eigenvalues();
    std::sort(expected.begin(), expected.end());
    const Eigen::Vector4d ev = rho.eigenvalues();
    for (int i = 0; i < 4; ++i) CHECK(std::abs(ev(i) - expected[i]) < 1e-10);
  }
}

TEST_CASE("admissibility agrees with the eigensolver outside the tetrahedron") {
  Rng rng(5);
  int rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const CorrelationVector c(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    BlochRepresentation b;
    b.T = c.values().asDiagonal();
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(b.reassemble());
    const bool psd = solver.eigenvalues()(0) >= -tolerance::kPsd;
    CHECK(psd == c.is_bell_admissible());
    if (!psd) {
      ++rejected;
      CHECK(code_of([&] { bell_diagonal_from_c(c); }) == ErrorCode::NotPositiveSemidefinite);
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("correlation vector scalars") {
  const CorrelationVector c(0.8, -0.5, 0.3);
  CHECK(c.norm() == doctest::Approx(std::sqrt(0.98)));
  CHECK(c.min_abs() == doctest::Approx(0.3));
  CHECK(code_of([] { CorrelationVector(1.5, 0.0, 0.0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("as_bell_diagonal") {
  CHECK(as_bell_diagonal(werner(0.3)).has_value());
  CHECK(as_bell_diagonal(werner(0.3))->values().isApprox(Vector3::Constant(-0.3), 1e-12));
  CHECK_FALSE(as_bell_diagonal(product_state(Vector3(0, 0, 1), Vector3::Zero())).has_value());
}
