#pragma once

#include "parsfm/first_order.hpp"

namespace parsfm {

// Gaussian randomized smoothing: samples of the inner oracle at x + z with
// z ~ N(0, rho^2 I) are unbiased stochastic subgradients (and value
// estimates) of the convolution f_rho(x) = E f(x + z), which satisfies
// |f_rho - f| <= L rho sqrt(2 log n) for L-Lipschitz-in-l_inf f. Noise
// streams are split per sample index, so batched and serial runs match.
class SmoothedOracle : public FirstOrderOracle {
 public:
  SmoothedOracle(FirstOrderOracle& inner, double rho);

  int dim() const override { return inner_.dim(); }
  double lipschitz() const override { return inner_.lipschitz(); }
  double second_moment() const override { return inner_.second_moment(); }
  FirstOrderStats stats() const override { return inner_.stats(); }
  std::vector<GradSample> sample_round(const std::vector<Eigen::VectorXd>& points,
                                       Rng& rng) override;

  double rho() const { return rho_; }

 private:
  FirstOrderOracle& inner_;
  double rho_;
  std::uint64_t sample_counter_ = 0;
};

// Distortion bound L rho sqrt(2 log n), with n = 1 treated as n = 2.
double smoothing_distortion_bound(double lipschitz, double rho, int n);

}  // namespace parsfm
