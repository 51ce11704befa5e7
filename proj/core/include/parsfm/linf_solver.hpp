#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "parsfm/ball_accel.hpp"
#include "parsfm/first_order.hpp"

namespace parsfm {

// Knobs for the full solve pipeline. Defaults are the shipped constants the
// acceptance suite is calibrated against.
struct SolverConfig {
  double C = 4.0;
  double C_prime = 64.0;
  double c0 = 4.0;
  int batch_size = 0;  // 0: auto-size per ball call
  // Batches per ball call: a pilot to measure gradient variance, then the
  // remaining budget in one shot. The budget is sample-count driven, so depth
  // buys nothing here; standalone ball calls default to a longer schedule.
  int target_rounds_per_call = 2;
  std::int64_t max_outer_iters = 0;  // 0: theory cap only
  int plateau_window = 12;
  std::optional<double> rho_override;
  // Optional overrides for the call-level geometry: treat the oracle as
  // L-Lipschitz, move the search radius to R, replace the accuracy target.
  // Unset means "use what the call site derived".
  std::optional<double> L;
  std::optional<double> R;
  std::optional<double> eps;
  std::uint64_t seed = 1;

  std::string to_json() const;
  static SolverConfig from_json(const std::string& text);
};

struct LinfSolveResult {
  Eigen::VectorXd x;
  std::int64_t outer_iters = 0;
  std::int64_t ball_calls = 0;
  std::string stop_reason;
};

// Expected eps-approximate minimizer of f over the radius-R l_2 ball around
// the origin, for an l_inf-Lipschitz oracle. Composition: l_2-penalty
// regularization at radius R, Gaussian smoothing at
// rho = (eps/2) / (L sqrt(2 log n)), then ball acceleration with move radius
// rho, Lipschitz 3L, search radius 3R; the output is pulled back onto the
// ball if it strays outside.
LinfSolveResult solve_linf_unconstrained(FirstOrderOracle& oracle, double radius,
                                         double eps, const SolverConfig& config,
                                         Rng& rng);

// The acceleration geometry solve_linf_unconstrained would run with, for a
// dimension-n oracle with the given Lipschitz constant. Exposed so callers
// can audit round budgets (K, kappa, iteration cap) without solving.
AccelParams linf_accel_plan(int n, double lipschitz, double radius, double eps,
                            const SolverConfig& config);

// Same accuracy over the unit l_inf box: l_inf-penalty regularization at
// radius 1 turns it into the unconstrained problem with R = sqrt(n).
LinfSolveResult solve_linf_box_constrained(FirstOrderOracle& oracle, double eps,
                                           const SolverConfig& config, Rng& rng);

}  // namespace parsfm
