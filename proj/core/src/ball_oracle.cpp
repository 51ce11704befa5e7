#include "parsfm/ball_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parsfm {

BallOracleResult ball_optimize(FirstOrderOracle& oracle, const Eigen::VectorXd& center,
                               const BallOracleParams& params, Rng& rng) {
  if (params.phi <= 0 || params.lambda <= 0 || params.radius <= 0) {
    throw std::invalid_argument("ball oracle needs positive phi, lambda, radius");
  }
  if (center.size() != oracle.dim()) throw std::invalid_argument("dimension mismatch");

  // Hard query cap from the advertised second moment. The advertised bound is
  // often far above the noise actually seen at the iterates (penalty terms
  // that never activate, worst-case compositions), so the loop re-derives the
  // budget from the measured mean of ||g||^2 and stops as soon as the
  // measured budget is spent. The cap is never exceeded either way.
  const double per_sample = params.c0 / (params.phi * params.lambda);
  const std::int64_t cap = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(per_sample * oracle.second_moment())));
  const std::int64_t need_floor = std::min<std::int64_t>(cap, 32);

  std::int64_t steps_max;
  if (params.batch_size > 0) {
    steps_max = std::max<std::int64_t>(1, (cap + params.batch_size - 1) / params.batch_size);
  } else {
    steps_max = std::min<std::int64_t>(std::max(1, params.target_rounds), cap);
  }

  Eigen::VectorXd x = center;
  Eigen::VectorXd averaged = Eigen::VectorXd::Zero(center.size());
  double weight_total = 0.0;
  double value_acc = 0.0;
  double value_weight = 0.0;
  double grad_sumsq = 0.0;
  std::int64_t issued = 0;
  std::int64_t steps_taken = 0;

  for (std::int64_t t = 0; t < steps_max; ++t) {
    std::int64_t need = cap;
    if (issued > 0) {
      const double measured = grad_sumsq / static_cast<double>(issued);
      need = static_cast<std::int64_t>(std::ceil(per_sample * measured));
      need = std::clamp(need, need_floor, cap);
    }
    if (issued >= need) break;

    std::int64_t batch;
    if (params.batch_size > 0) {
      batch = params.batch_size;
    } else if (issued == 0) {
      // pilot: large enough to read the noise level, small enough to be
      // cheap when the advertised bound is loose
      batch = std::min<std::int64_t>(need_floor, (cap + steps_max - 1) / steps_max);
      batch = std::max<std::int64_t>(1, batch);
    } else {
      // spread what is still owed evenly over the remaining steps
      batch = (need - issued + steps_max - t - 1) / (steps_max - t);
      batch = std::max<std::int64_t>(1, batch);
    }
    batch = std::min(batch, cap - issued);
    issued += batch;

    std::vector<Eigen::VectorXd> points(static_cast<std::size_t>(batch), x);
    std::vector<GradSample> samples = oracle.sample_round(points, rng);

    Eigen::VectorXd grad = Eigen::VectorXd::Zero(center.size());
    double value_sum = 0.0;
    int valued = 0;
    for (const GradSample& s : samples) {
      grad += s.grad;
      grad_sumsq += s.grad.squaredNorm();
      if (s.has_value()) {
        value_sum += s.value;
        ++valued;
      }
    }
    grad /= static_cast<double>(batch);

    const double w = static_cast<double>(t + 1);
    const double eta = 2.0 / (params.lambda * (static_cast<double>(t) + 2.0));

    // prox step for (lambda/2)||x - center||^2: shrink toward the center,
    // then cap the radius
    Eigen::VectorXd moved = x - eta * grad;
    Eigen::VectorXd shrunk =
        (moved + eta * params.lambda * center) / (1.0 + eta * params.lambda);
    Eigen::VectorXd offset = shrunk - center;
    const double dist = offset.norm();
    if (dist > params.radius) offset *= params.radius / dist;
    x = center + offset;

    averaged += w * x;
    weight_total += w;
    if (valued > 0) {
      value_acc += w * (value_sum / valued);
      value_weight += w;
    }
    ++steps_taken;
  }

  BallOracleResult result;
  result.x = averaged / weight_total;
  result.value_estimate = value_weight > 0
                              ? value_acc / value_weight
                              : std::numeric_limits<double>::quiet_NaN();
  result.steps = steps_taken;
  result.queries = issued;
  return result;
}

}  // namespace parsfm
