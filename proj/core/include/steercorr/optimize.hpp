#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "steercorr/sampling.hpp"

namespace steercorr {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct NelderMeadOptions {
  // Stop when the simplex's function spread is below ftol and its diameter
  // below xtol, or when the evaluation budget runs out.
  double ftol = 1e-9;
  double xtol = 1e-8;
  double initial_step = 0.5;
  int max_evaluations = 20000;
  // Fresh simplices restarted from the incumbent until the gain drops below
  // ftol. Helps on objectives with kinks.
  int polish_rounds = 6;
};

struct OptimizationResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Adaptive-parameter Nelder-Mead simplex minimization.
OptimizationResult nelder_mead_minimize(const Objective& f, const Eigen::VectorXd& start,
                                        const NelderMeadOptions& options = {});

struct MultiStartOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  // Largest tolerated gap between the best and the runner-up restart.
  double spread_tolerance = 1e-5;
  NelderMeadOptions local;
};

struct MultiStartResult {
  OptimizationResult best;
  // best - second best over restarts (0 for a single restart).
  double spread = 0.0;
  std::vector<double> restart_values;
};

// Maximizes f from `options.restarts` starting points drawn uniformly from the
// box [lower, upper]. Throws ConvergenceFailure when spread exceeds
// spread_tolerance.
MultiStartResult multistart_maximize(const Objective& f, const Eigen::VectorXd& lower,
                                     const Eigen::VectorXd& upper,
                                     const MultiStartOptions& options = {});

}  // namespace steercorr
