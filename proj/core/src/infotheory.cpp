#include "steercorr/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steercorr/error.hpp"

namespace steercorr {

namespace {

double entropy_term(double lambda) {
  if (lambda < 0.0 && lambda >= -kEigenClamp) lambda = 0.0;
  lambda = std::min(lambda, 1.0);
  return lambda > 0.0 ? -lambda * std::log2(lambda) : 0.0;
}

void validate_state(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols() || (rho.rows() != 2 && rho.rows() != 4)) {
    throw Error(ErrorCode::OutOfDomain, "density matrix must be 2x2 or 4x4");
  }
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tolerance::kHermitian) {
    throw Error(ErrorCode::NotHermitian, "max |M - M^dagger| = " + std::to_string(herm), herm);
  }
  const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_dev > tolerance::kTrace) {
    throw Error(ErrorCode::TraceNotOne, "|Tr M - 1| = " + std::to_string(trace_dev), trace_dev);
  }
}

// Spectrum of a Hermitian 2x2 matrix a I + r.sigma is a +- |r|.
double qubit_entropy_unchecked(const Matrix2c& rho) {
  const double mean = 0.5 * (rho(0, 0).real() + rho(1, 1).real());
  const double rx = rho(0, 1).real();
  const double ry = -rho(0, 1).imag();
  const double rz = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
  const double r = std::sqrt(rx * rx + ry * ry + rz * rz);
  return entropy_term(mean + r) + entropy_term(mean - r);
}

}  // namespace

double binary_entropy(double x) {
  constexpr double kSlack = 1e-12;
  if (!(x >= -kSlack && x <= 1.0 + kSlack)) {
    throw Error(ErrorCode::OutOfDomain,
                "binary entropy argument outside [0, 1]: " + std::to_string(x), x);
  }
  x = std::clamp(x, 0.0, 1.0);
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  validate_state(rho);
  const Eigen::MatrixXcd h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  if (ev(0) < -tolerance::kPsd) {
    throw Error(ErrorCode::NotPositiveSemidefinite,
                "smallest eigenvalue = " + std::to_string(ev(0)), ev(0));
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) s += entropy_term(ev(i));
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += entropy_term(solver.eigenvalues()(i));
  return s;
}

Matrix2c partial_trace_alice(const Matrix4c& m) {
  return m.block<2, 2>(0, 0) + m.block<2, 2>(2, 2);
}

Matrix2c partial_trace_bob(const Matrix4c& m) {
  Matrix2c out;
  for (int a = 0; a < 2; ++a) {
    for (int a2 = 0; a2 < 2; ++a2) {
      out(a, a2) = m(2 * a, 2 * a2) + m(2 * a + 1, 2 * a2 + 1);
    }
  }
  return out;
}

Matrix2c ConditionalEnsemble::average() const {
  return outcomes[0].probability * outcomes[0].state +
         outcomes[1].probability * outcomes[1].state;
}

ConditionalEnsemble conditional_ensemble(const DensityMatrix& rho, const QubitBasis& basis) {
  ConditionalEnsemble out;
  for (int i = 0; i < 2; ++i) {
    const Matrix4c projected = kron(basis.projector(i), pauli::identity()) * rho.matrix();
    const Matrix2c unnormalized = partial_trace_alice(projected);
    const double p = std::max(unnormalized.trace().real(), 0.0);
    out.outcomes[i].probability = p;
    if (p < kNegligibleProbability) {
      out.outcomes[i].state = 0.5 * pauli::identity();
    } else {
      const Matrix2c s = unnormalized / p;
      out.outcomes[i].state = 0.5 * (s + s.adjoint());
    }
  }
  return out;
}

double holevo(const ConditionalEnsemble& ensemble) {
  double chi = qubit_entropy_unchecked(ensemble.average());
  for (const auto& outcome : ensemble.outcomes) {
    if (outcome.probability < kNegligibleProbability) continue;
    chi -= outcome.probability * qubit_entropy_unchecked(outcome.state);
  }
  // Concavity guarantees chi >= 0; trim round-off.
  return std::max(chi, 0.0);
}

double holevo(const DensityMatrix& rho, const QubitBasis& basis) {
  return holevo(conditional_ensemble(rho, basis));
}

}  // namespace steercorr
