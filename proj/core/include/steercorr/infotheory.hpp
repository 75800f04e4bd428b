#pragma once

#include <array>

#include <Eigen/Dense>

#include "steercorr/mub.hpp"
#include "steercorr/qstate.hpp"

namespace steercorr {

// All entropies are in bits.

// -x log2 x - (1-x) log2 (1-x); throws OutOfDomain outside [0, 1] (1e-12 slack).
double binary_entropy(double x);

// Eigenvalues inside [-1e-10, 0) are treated as zero before taking logs.
inline constexpr double kEigenClamp = 1e-10;

// Von Neumann entropy of a 2x2 or 4x4 density matrix. The matrix is validated
// with the same tolerances as DensityMatrix.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);
double von_neumann_entropy(const DensityMatrix& rho);

// Outcomes with probability below this report I/2 as their conditional state.
inline constexpr double kNegligibleProbability = 1e-12;

struct ConditionalOutcome {
  double probability = 0.0;
  Matrix2c state;
};

// Bob's states conditioned on the outcomes of a projective measurement on
// Alice's qubit, indexed like QubitBasis::projector.
struct ConditionalEnsemble {
  std::array<ConditionalOutcome, 2> outcomes;

  // sum_i p_i rho_i^B, i.e. Bob's reduced state.
  Matrix2c average() const;
};

ConditionalEnsemble conditional_ensemble(const DensityMatrix& rho, const QubitBasis& basis);

// S(sum_i p_i rho_i) - sum_i p_i S(rho_i) for the ensemble above.
double holevo(const ConditionalEnsemble& ensemble);
double holevo(const DensityMatrix& rho, const QubitBasis& basis);

// Partial traces of a two-qubit operator.
Matrix2c partial_trace_alice(const Matrix4c& m);
Matrix2c partial_trace_bob(const Matrix4c& m);

}  // namespace steercorr
