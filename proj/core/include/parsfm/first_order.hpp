#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Core>

#include "parsfm/rng.hpp"

namespace parsfm {

// One stochastic subgradient sample; value is an unbiased estimate of the
// function value at the queried point when available (NaN otherwise).
struct GradSample {
  double value = std::numeric_limits<double>::quiet_NaN();
  Eigen::VectorXd grad;
  bool has_value() const { return value == value; }
};

struct FirstOrderStats {
  std::int64_t rounds = 0;   // parallel sample groups issued
  std::int64_t samples = 0;  // individual subgradient samples
};

// Stochastic first-order oracle with batched access: one sample_round call is
// one parallel round no matter how many points it carries. Wrapper layers
// (regularization, smoothing) forward rounds to the layer below, so stats()
// always reports the base oracle's accounting.
class FirstOrderOracle {
 public:
  virtual ~FirstOrderOracle() = default;

  virtual int dim() const = 0;
  // Lipschitz bound in the l_inf norm (which also bounds the l_2 constant).
  virtual double lipschitz() const = 0;
  // Bound on E ||g||_2^2 for any queried point; always >= lipschitz^2.
  virtual double second_moment() const = 0;
  virtual FirstOrderStats stats() const = 0;

  // One parallel round: a stochastic subgradient sample at every point.
  virtual std::vector<GradSample> sample_round(const std::vector<Eigen::VectorXd>& points,
                                               Rng& rng) = 0;

  GradSample sample(const Eigen::VectorXd& x, Rng& rng);
};

// Adapter for closed-form convex functions, with optional additive Gaussian
// gradient noise (per coordinate std `noise_std`) to exercise the stochastic
// contract in tests.
class FunctionOracle : public FirstOrderOracle {
 public:
  using ValueFn = std::function<double(const Eigen::VectorXd&)>;
  using GradFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

  FunctionOracle(int dim, ValueFn value, GradFn grad, double lipschitz,
                 double noise_std = 0.0);

  int dim() const override { return dim_; }
  double lipschitz() const override { return lipschitz_; }
  double second_moment() const override { return second_moment_; }
  FirstOrderStats stats() const override { return stats_; }
  std::vector<GradSample> sample_round(const std::vector<Eigen::VectorXd>& points,
                                       Rng& rng) override;

 private:
  int dim_;
  ValueFn value_;
  GradFn grad_;
  double lipschitz_;
  double noise_std_;
  double second_moment_;
  FirstOrderStats stats_;
  std::uint64_t sample_counter_ = 0;
};

}  // namespace parsfm
