#include "parsfm/ball_accel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parsfm {

double AccelParams::K() const {
  return std::pow(radius / ball_radius, 2.0 / 3.0);
}

double AccelParams::lambda_star() const {
  const double log_kappa = std::log(std::max(kappa(), 1.0 + 1e-12));
  const double k = K();
  return eps_opt * k * k * log_kappa * log_kappa / (radius * radius);
}

std::int64_t AccelParams::iteration_cap() const {
  const double log_kappa = std::log(std::max(kappa(), 1.0 + 1e-12));
  const double cap = C * K() * std::max(log_kappa, 1.0);
  std::int64_t theory = static_cast<std::int64_t>(std::ceil(cap));
  theory = std::max<std::int64_t>(theory, 1);
  if (max_outer_iters > 0) return std::min(theory, max_outer_iters);
  return theory;
}

AccelResult ball_accel(FirstOrderOracle& oracle, const Eigen::VectorXd& start,
                       const AccelParams& params, Rng& rng) {
  if (params.lipschitz <= 0 || params.radius <= 0 || params.ball_radius <= 0 ||
      params.eps_opt <= 0) {
    throw std::invalid_argument("accel parameters must be positive");
  }
  if (params.ball_radius > params.radius) {
    throw std::invalid_argument("ball radius exceeds search radius");
  }
  if (params.eps_opt > params.lipschitz * params.radius) {
    throw std::invalid_argument("eps_opt beyond the trivial LR bound");
  }

  const double r = params.ball_radius;
  const double lambda_min = std::max(params.lambda_min(), 1e-12);
  const double lambda_max = std::max(params.lambda_max(), lambda_min);

  Eigen::VectorXd x = start;
  Eigen::VectorXd v = start;
  double big_a = 0.0;
  double lambda = std::clamp(params.lambda_star(), lambda_min, lambda_max);

  AccelResult result;
  result.x = x;
  double best_estimate = std::numeric_limits<double>::infinity();
  bool have_estimates = false;
  std::int64_t since_improvement = 0;

  const std::int64_t cap = params.iteration_cap();
  for (std::int64_t k = 0; k < cap; ++k) {
    const std::int64_t calls_before = result.ball_calls;
    // doubling/halving search for a lambda whose prox move spans [r/2, r];
    // warm-started from the previous iteration's accepted value
    BallOracleResult ball;
    Eigen::VectorXd y;
    double a = 0.0;
    double lambda_used = lambda;
    bool raised = false, lowered = false;
    for (int probe = 0; probe < 48; ++probe) {
      lambda_used = lambda;
      a = (1.0 + std::sqrt(1.0 + 4.0 * big_a * lambda)) / (2.0 * lambda);
      y = (big_a * x + a * v) / (big_a + a);

      BallOracleParams call;
      call.phi = lambda * r * r / params.C_prime;
      call.lambda = lambda;
      call.radius = r;
      call.c0 = params.c0;
      call.batch_size = params.batch_size;
      call.target_rounds = params.target_rounds_per_call;
      ball = ball_optimize(oracle, y, call, rng);
      ++result.ball_calls;
      result.lambda_trace.push_back(lambda_used);

      const double step = (ball.x - y).norm();
      if (step >= (1.0 - 1e-9) * r && lambda < lambda_max && !lowered) {
        lambda = std::min(2.0 * lambda, lambda_max);
        raised = true;
        continue;
      }
      if (step < 0.5 * r && lambda > lambda_min && !raised) {
        lambda = std::max(0.5 * lambda, lambda_min);
        lowered = true;
        continue;
      }
      break;
    }

    v -= a * lambda_used * (y - ball.x);
    x = ball.x;
    big_a += a;
    ++result.outer_iters;
    const std::int64_t calls_so_far = result.ball_calls;
    result.max_calls_per_iter =
        std::max(result.max_calls_per_iter, calls_so_far - calls_before);

    if (ball.value_estimate == ball.value_estimate) {
      have_estimates = true;
      if (ball.value_estimate < best_estimate - params.eps_opt / 4.0) {
        since_improvement = 0;
      } else {
        ++since_improvement;
      }
      if (ball.value_estimate < best_estimate) {
        best_estimate = ball.value_estimate;
        result.x = x;
      }
    } else {
      result.x = x;
    }

    // Guler-style certificate: error <= ||start - x*||^2 / (2 A) <= R^2/(2A)
    if (big_a >= 2.0 * params.radius * params.radius / params.eps_opt) {
      result.stop_reason = "accuracy";
      break;
    }
    if (params.plateau_window > 0 && have_estimates &&
        since_improvement >= params.plateau_window) {
      result.stop_reason = "plateau";
      break;
    }
  }

  if (result.stop_reason.empty()) result.stop_reason = "iteration-cap";
  result.best_value_estimate =
      have_estimates ? best_estimate : std::numeric_limits<double>::quiet_NaN();
  return result;
}

}  // namespace parsfm
