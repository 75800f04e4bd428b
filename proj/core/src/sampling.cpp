#include "steercorr/sampling.hpp"

#include <cmath>
#include <numbers>

namespace steercorr {

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CorrelationVector sample_tetrahedron(Rng& rng) {
  for (;;) {
    const Vector3 c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    CorrelationVector candidate(c);
    if (candidate.is_bell_admissible(0.0)) return candidate;
  }
}

std::vector<CorrelationVector> sample_tetrahedron(Rng& rng, std::size_t count) {
  std::vector<CorrelationVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_tetrahedron(rng));
  return out;
}

Vector3 random_unit_vector(Rng& rng) {
  for (;;) {
    const Vector3 g(rng.normal(), rng.normal(), rng.normal());
    const double n = g.norm();
    if (n > 1e-12) return g / n;
  }
}

Matrix2c random_unitary(Rng& rng) {
  Matrix2c z;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) z(i, j) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
  }
  Eigen::HouseholderQR<Matrix2c> qr(z);
  Matrix2c q = qr.householderQ();
  const Matrix2c r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases so the distribution is Haar.
  for (int j = 0; j < 2; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Vector4c random_pure_vector(Rng& rng) {
  Vector4c v;
  for (int i = 0; i < 4; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return v / v.norm();
}

}  // namespace steercorr
