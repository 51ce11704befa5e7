#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "parsfm/first_order.hpp"

namespace parsfm {

// Accuracy contract for one proximal subproblem: return x in the radius-r
// ball around the center with
//   E[F(x) + (lambda/2)||x - center||^2] <= min over the ball + phi.
struct BallOracleParams {
  double phi = 0.0;
  double lambda = 0.0;
  double radius = 0.0;
  // Query budget constant: total samples = ceil(c0 * sigma^2 / (phi lambda)).
  double c0 = 4.0;
  // Fixed per-step minibatch when > 0; 0 picks the batch so the budget fits
  // into target_rounds steps. The step count also bounds how far the
  // deterministic part of the gradient can contract the iterate, so the
  // default is large enough that tight phi targets are not bias-limited;
  // callers that trade accuracy for fewer rounds lower it explicitly.
  int batch_size = 0;
  int target_rounds = 16;
};

struct BallOracleResult {
  Eigen::VectorXd x;
  // Weighted mean of the sample values seen along the way; an upper-biased
  // estimate of F at the returned point (NaN if the oracle has no values).
  double value_estimate = 0.0;
  std::int64_t steps = 0;
  std::int64_t queries = 0;
};

// Stochastic proximal subgradient descent for the ball-constrained prox
// objective. The quadratic term is handled by its exact prox map (shrink
// toward the center, then radial projection), so the error after T steps is
// driven by the sample noise alone: E excess <= O(sigma^2 / (lambda T)) with
// step size 2 / (lambda (t+2)) and (t+1)-weighted iterate averaging. Total
// samples never exceed ceil(c0 sigma^2 / (phi lambda)); when the measured
// mean of ||g||^2 runs below the advertised sigma^2, the loop stops at the
// measured budget instead of spending the whole cap.
BallOracleResult ball_optimize(FirstOrderOracle& oracle, const Eigen::VectorXd& center,
                               const BallOracleParams& params, Rng& rng);

}  // namespace parsfm
