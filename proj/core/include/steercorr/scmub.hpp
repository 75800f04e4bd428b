#pragma once

#include <vector>

#include "steercorr/optimize.hpp"
#include "steercorr/qstate.hpp"

namespace steercorr {

// Result of maximizing the smallest Holevo quantity over a set of one, two or
// three mutually unbiased Alice bases.
struct ScmubReport {
  double value = 0.0;
  // (theta, phi) for a single basis, ZYZ angles (alpha, beta, gamma) otherwise.
  std::vector<double> parameters;
  std::vector<Vector3> directions;
  std::vector<double> per_basis_holevo;
};

inline const MultiStartOptions kSingleBasisSearch{
    .restarts = 32, .seed = 0, .spread_tolerance = 1e-5, .local = {}};
inline const MultiStartOptions kFrameSearch{
    .restarts = 64, .seed = 0, .spread_tolerance = 1e-5, .local = {}};

// max over Alice bases of the Holevo quantity of Bob's conditional ensemble.
ScmubReport c1_numeric(const DensityMatrix& rho, const MultiStartOptions& search = kSingleBasisSearch);
// max over unbiased pairs of the smaller Holevo quantity.
ScmubReport c2_numeric(const DensityMatrix& rho, const MultiStartOptions& search = kFrameSearch);
// max over unbiased triads of the smallest Holevo quantity.
ScmubReport c3_numeric(const DensityMatrix& rho, const MultiStartOptions& search = kFrameSearch);

// Bell-diagonal closed forms; both throw NotPositiveSemidefinite when c is
// outside the tetrahedron.
double c2_closed(const CorrelationVector& c);
double c3_closed(const CorrelationVector& c);

}  // namespace steercorr
