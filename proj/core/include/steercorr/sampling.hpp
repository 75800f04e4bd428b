#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "steercorr/qstate.hpp"

namespace steercorr {

// Seeded generator with a platform-independent uniform draw, so a given seed
// yields the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
};

// Rejection sampling of c in [-1, 1]^3 against the four Bell-diagonal
// eigenvalue constraints; uniform over the tetrahedron.
CorrelationVector sample_tetrahedron(Rng& rng);
std::vector<CorrelationVector> sample_tetrahedron(Rng& rng, std::size_t count);

// Uniform on the unit sphere.
Vector3 random_unit_vector(Rng& rng);

// Haar-random 2x2 unitary.
Matrix2c random_unitary(Rng& rng);

// Haar-random pure two-qubit state vector.
Vector4c random_pure_vector(Rng& rng);

}  // namespace steercorr
