#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "parsfm/ball_oracle.hpp"
#include "parsfm/first_order.hpp"

namespace parsfm {

// Geometry of one accelerated run: minimize F (Lipschitz L in l_2) over
// points within distance R of the start, to expected accuracy eps_opt, using
// ball-oracle moves of radius r. Derived quantities follow the proximal
// acceleration recipe: kappa = LR/eps_opt, K = (R/r)^(2/3),
// lambda_star = eps_opt K^2 log^2(kappa) / R^2.
struct AccelParams {
  double lipschitz = 0.0;
  double radius = 0.0;       // R
  double ball_radius = 0.0;  // r
  double eps_opt = 0.0;

  double C = 4.0;        // universal-constant knob
  double C_prime = 64.0; // ball oracle accuracy phi = lambda r^2 / C_prime
  double c0 = 4.0;       // ball oracle query budget constant
  int batch_size = 0;
  int target_rounds_per_call = 8;
  std::int64_t max_outer_iters = 0;  // 0: use the K log kappa cap
  // Stop once the best value estimate improves by less than eps_opt/4 over
  // this many consecutive iterations; 0 disables the heuristic.
  int plateau_window = 12;

  double kappa() const { return lipschitz * radius / eps_opt; }
  double K() const;
  double lambda_star() const;
  double lambda_min() const { return lambda_star() / C; }
  double lambda_max() const { return C * lipschitz / eps_opt; }
  std::int64_t iteration_cap() const;
};

struct AccelResult {
  Eigen::VectorXd x;
  std::int64_t outer_iters = 0;
  std::int64_t ball_calls = 0;
  std::int64_t max_calls_per_iter = 0;
  // Prox coefficient of every ball call, in call order. Each entry must lie
  // inside [lambda_min(), lambda_max()].
  std::vector<double> lambda_trace;
  double best_value_estimate = 0.0;
  std::string stop_reason;  // "accuracy", "plateau", "iteration-cap"
};

// Accelerated proximal point driven by the ball oracle. Per iteration:
//   a_k solves a_k^2 = (A_k + a_k) / lambda_k
//   y_k = (A_k x_k + a_k v_k) / (A_k + a_k)
//   x_{k+1} = ball_optimize at y_k          (phi = lambda_k r^2 / C')
//   v_{k+1} = v_k - a_k lambda_k (y_k - x_{k+1})
// lambda_k is found by a doubling/halving search so the accepted move length
// lands in [r/2, r], clamped to [lambda_star/C, C L / eps_opt]. Returns the
// iterate with the best value estimate (the final iterate when the oracle
// carries no values).
AccelResult ball_accel(FirstOrderOracle& oracle, const Eigen::VectorXd& start,
                       const AccelParams& params, Rng& rng);

}  // namespace parsfm
