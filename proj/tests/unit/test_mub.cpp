#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steercorr/error.hpp"
#include "steercorr/mub.hpp"
#include "steercorr/sampling.hpp"

using namespace steercorr;

namespace {
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

TEST_CASE("basis_from_direction") {
  const QubitBasis z = basis_from_direction(Vector3(0, 0, 1));
  Matrix2c ket0 = Matrix2c::Zero();
  ket0(0, 0) = 1.0;
  CHECK((z.projector(0) - ket0).norm() < 1e-15);

  const QubitBasis x = basis_from_direction(Vector3(1, 0, 0));
  Matrix2c plus;
  plus << 0.5, 0.5, 0.5, 0.5;
  CHECK((x.projector(0) - plus).norm() < 1e-15);
  CHECK((x.projector(1) - (Matrix2c::Identity() - plus)).norm() < 1e-15);

  const QubitBasis z2 = basis_from_direction(Vector3(0, 0, 2));
  CHECK((z2.projector(0) - z.projector(0)).norm() < 1e-15);

  CHECK_THROWS_AS(basis_from_direction(Vector3::Zero()), Error);
}

TEST_CASE("projectors are complementary idempotents and kets are their eigenvectors") {
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const QubitBasis b = basis_from_direction(random_unit_vector(rng));
    CHECK(std::abs(b.direction().norm() - 1.0) < 1e-12);
    CHECK((b.projector(0) + b.projector(1) - Matrix2c::Identity()).norm() < 1e-12);
    for (int k = 0; k < 2; ++k) {
      CHECK((b.projector(k) * b.projector(k) - b.projector(k)).norm() < 1e-12);
      const Eigen::Vector2cd v = b.ket(k);
      CHECK((v * v.adjoint() - b.projector(k)).norm() < 1e-12);
    }
  }
}

TEST_CASE("unbiasedness_overlap") {
  const QubitBasis z = basis_from_direction(Vector3::UnitZ());
  const QubitBasis x = basis_from_direction(Vector3::UnitX());
  CHECK((unbiasedness_overlap(z, x).array() - kInvSqrt2).abs().maxCoeff() < 1e-12);
  CHECK(mutually_unbiased(z, x));

  const Eigen::Matrix2d same = unbiasedness_overlap(z, z);
  CHECK(same.isApprox(Eigen::Matrix2d::Identity(), 1e-12));
  CHECK_FALSE(mutually_unbiased(z, z));

  for (double theta : {0.3, 1.1, 2.5}) {
    const QubitBasis n = basis_from_direction(direction_from_angles(theta, 0.7));
    const Eigen::Matrix2d o = unbiasedness_overlap(z, n);
    CHECK(o(0, 0) == doctest::Approx(std::cos(theta / 2)));
    CHECK(o(0, 1) == doctest::Approx(std::sin(theta / 2)));
    CHECK(o(1, 0) == doctest::Approx(std::sin(theta / 2)));
    CHECK(o(1, 1) == doctest::Approx(std::cos(theta / 2)));
  }
}

TEST_CASE("MubPair and MubTriad reject non-orthogonal directions") {
  const QubitBasis z = basis_from_direction(Vector3::UnitZ());
  const QubitBasis tilted = basis_from_direction(Vector3(1, 0, 0.01));
  CHECK_THROWS_AS(MubPair(z, tilted), Error);
  CHECK_NOTHROW(MubPair(z, basis_from_direction(Vector3::UnitY())));
  CHECK_THROWS_AS(MubTriad(z, basis_from_direction(Vector3::UnitX()), tilted), Error);
}

TEST_CASE("frame_from_angles") {
  const MubTriad id = frame_from_angles(0, 0, 0);
  CHECK(id[0].direction().isApprox(Vector3::UnitX()));
  CHECK(id[1].direction().isApprox(Vector3::UnitY()));
  CHECK(id[2].direction().isApprox(Vector3::UnitZ()));

  // R_y(pi/2) sends x to -z.
  const MubTriad quarter = frame_from_angles(0, std::numbers::pi / 2, 0);
  CHECK((quarter[0].direction() - Vector3(0, 0, -1)).norm() < 1e-12);

  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const MubTriad t = frame_from_angles(rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10));
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        CHECK(std::abs(t[a].direction().dot(t[b].direction())) < 1e-12);
        CHECK((unbiasedness_overlap(t[a], t[b]).array() - kInvSqrt2).abs().maxCoeff() < 1e-10);
      }
    }
    const MubPair p = t.leading_pair();
    CHECK(mutually_unbiased(p.first(), p.second()));
  }
}

TEST_CASE("ZYZ convention") {
  const double a = 0.4, b = 1.2, g = -0.7;
  const Matrix3 r = rotation_zyz(a, b, g);
  auto rz = [](double t) {
    Matrix3 m;
    m << std::cos(t), -std::sin(t), 0, std::sin(t), std::cos(t), 0, 0, 0, 1;
    return m;
  };
  Matrix3 ry;
  ry << std::cos(b), 0, std::sin(b), 0, 1, 0, -std::sin(b), 0, std::cos(b);
  CHECK((r - rz(a) * ry * rz(g)).norm() < 1e-14);
}

TEST_CASE("frame parametrization reaches arbitrary frames up to axis signs") {
  // Recover ZYZ angles of a random rotation and check the frame matches.
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const Vector3 z = random_unit_vector(rng);
    const double beta = std::acos(std::clamp(z.z(), -1.0, 1.0));
    const double alpha = std::atan2(z.y(), z.x());
    const double gamma = rng.uniform(0, 2 * std::numbers::pi);
    const MubTriad t = frame_from_angles(alpha, beta, gamma);
    CHECK((t[2].direction() - z).norm() < 1e-10);
  }
}
