#pragma once

#include <Eigen/Core>

#include "parsfm/first_order.hpp"

namespace parsfm {

enum class Norm { kL2, kLinf };

double norm_of(const Eigen::VectorXd& v, Norm norm);

// Radial pullback onto the closed ball: c + (r / ||y - c||)(y - c).
// Requires ||y - c|| >= r; moving a point along its ray never increases the
// regularized objective, which is the property the solvers lean on.
Eigen::VectorXd project_to_ball(const Eigen::VectorXd& y, const Eigen::VectorXd& center,
                                double radius, Norm norm);

// f_reg(x) = f(x) + 2L max{0, ||x - c|| - r}: convex, 3L-Lipschitz, and its
// unconstrained minimum equals the minimum of f over the ball. Turning the
// ball constraint into this penalty is what lets one unconstrained solver
// serve every constrained call in the pipeline.
class RegularizedOracle : public FirstOrderOracle {
 public:
  RegularizedOracle(FirstOrderOracle& inner, Eigen::VectorXd center, double radius,
                    Norm norm);

  int dim() const override { return inner_.dim(); }
  double lipschitz() const override { return 3.0 * inner_.lipschitz(); }
  // ||g + 2L v||^2 <= 2 sigma^2 + 8 L^2 with ||v||_2 <= 1.
  double second_moment() const override {
    return 2.0 * inner_.second_moment() + 8.0 * inner_.lipschitz() * inner_.lipschitz();
  }
  FirstOrderStats stats() const override { return inner_.stats(); }
  std::vector<GradSample> sample_round(const std::vector<Eigen::VectorXd>& points,
                                       Rng& rng) override;

  double penalty(const Eigen::VectorXd& x) const;

 private:
  Eigen::VectorXd penalty_subgradient(const Eigen::VectorXd& x) const;

  FirstOrderOracle& inner_;
  Eigen::VectorXd center_;
  double radius_;
  Norm norm_;
};

}  // namespace parsfm
