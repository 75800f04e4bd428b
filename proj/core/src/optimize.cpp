#include "steercorr/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "steercorr/error.hpp"

namespace steercorr {

namespace {

OptimizationResult simplex_pass(const Objective& f, const Eigen::VectorXd& start,
                                double step, const NelderMeadOptions& options,
                                int budget) {
  const Eigen::Index n = start.size();
  const double dim = static_cast<double>(n);
  // Gao & Han adaptive coefficients; reduce to the classic ones for n = 2.
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dim;
  const double contract = 0.75 - 1.0 / (2.0 * dim);
  const double shrink = 1.0 - 1.0 / dim;

  std::vector<Eigen::VectorXd> pts(static_cast<std::size_t>(n) + 1, start);
  std::vector<double> vals(pts.size());
  for (Eigen::Index i = 0; i < n; ++i) pts[static_cast<std::size_t>(i) + 1](i) += step;

  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(pts.size());
  bool converged = false;
  while (evals < budget) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    double diameter = 0.0;
    for (const auto& p : pts) diameter = std::max(diameter, (p - pts[best]).cwiseAbs().maxCoeff());
    if (vals[worst] - vals[best] <= options.ftol && diameter <= options.xtol) {
      converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i != worst) centroid += pts[i];
    }
    centroid /= dim;

    const Eigen::VectorXd xr = centroid + reflect * (centroid - pts[worst]);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      const Eigen::VectorXd xe = centroid + expand * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second_worst]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + contract * (xr - centroid))
                                       : Eigen::VectorXd(centroid - contract * (centroid - pts[worst]));
    const double fc = eval(xc);
    if (fc < std::min(fr, vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == best) continue;
      pts[i] = pts[best] + shrink * (pts[i] - pts[best]);
      vals[i] = eval(pts[i]);
    }
  }

  const auto it = std::min_element(vals.begin(), vals.end());
  const auto idx = static_cast<std::size_t>(std::distance(vals.begin(), it));
  return OptimizationResult{pts[idx], vals[idx], evals, converged};
}

}  // namespace

OptimizationResult nelder_mead_minimize(const Objective& f, const Eigen::VectorXd& start,
                                        const NelderMeadOptions& options) {
  if (start.size() == 0) {
    return OptimizationResult{start, f(start), 1, true};
  }
  OptimizationResult result =
      simplex_pass(f, start, options.initial_step, options, options.max_evaluations);
  double step = options.initial_step;
  for (int round = 0; round < options.polish_rounds; ++round) {
    const int budget = options.max_evaluations - result.evaluations;
    if (budget <= 0) break;
    step *= 0.1;
    OptimizationResult next = simplex_pass(f, result.x, step, options, budget);
    const double gain = result.value - next.value;
    next.evaluations += result.evaluations;
    if (gain > 0.0) {
      result = next;
    } else {
      result.evaluations = next.evaluations;
    }
    if (gain <= options.ftol) break;
  }
  return result;
}

MultiStartResult multistart_maximize(const Objective& f, const Eigen::VectorXd& lower,
                                     const Eigen::VectorXd& upper,
                                     const MultiStartOptions& options) {
  if (options.restarts < 1) {
    throw Error(ErrorCode::OutOfRange, "multi-start needs at least one restart");
  }
  Rng rng(options.seed);
  const Objective negated = [&f](const Eigen::VectorXd& x) { return -f(x); };

  MultiStartResult out;
  out.restart_values.reserve(static_cast<std::size_t>(options.restarts));
  bool have_best = false;
  for (int r = 0; r < options.restarts; ++r) {
    Eigen::VectorXd start(lower.size());
    for (Eigen::Index i = 0; i < start.size(); ++i) start(i) = rng.uniform(lower(i), upper(i));
    OptimizationResult local = nelder_mead_minimize(negated, start, options.local);
    local.value = -local.value;
    out.restart_values.push_back(local.value);
    // Ties keep the earliest restart.
    if (!have_best || local.value > out.best.value) {
      out.best = local;
      have_best = true;
    }
  }

  std::vector<double> sorted = out.restart_values;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  out.spread = sorted.size() > 1 ? sorted[0] - sorted[1] : 0.0;
  if (out.spread > options.spread_tolerance) {
    throw Error(ErrorCode::ConvergenceFailure,
                "best restart is not reproduced: gap to runner-up = " +
                    std::to_string(out.spread),
                out.spread);
  }
  return out;
}

}  // namespace steercorr
