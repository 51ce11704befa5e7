#include "parsfm/regularize.hpp"

#include <cmath>
#include <stdexcept>

namespace parsfm {

double norm_of(const Eigen::VectorXd& v, Norm norm) {
  return norm == Norm::kL2 ? v.norm() : v.lpNorm<Eigen::Infinity>();
}

Eigen::VectorXd project_to_ball(const Eigen::VectorXd& y, const Eigen::VectorXd& center,
                                double radius, Norm norm) {
  if (radius <= 0) throw std::invalid_argument("ball radius must be positive");
  if (y.size() != center.size()) throw std::invalid_argument("dimension mismatch");
  const double dist = norm_of(y - center, norm);
  if (dist < radius) {
    throw std::invalid_argument("point already inside the open ball");
  }
  return center + (radius / dist) * (y - center);
}

RegularizedOracle::RegularizedOracle(FirstOrderOracle& inner, Eigen::VectorXd center,
                                     double radius, Norm norm)
    : inner_(inner), center_(std::move(center)), radius_(radius), norm_(norm) {
  if (radius <= 0) throw std::invalid_argument("ball radius must be positive");
  if (center_.size() != inner.dim()) throw std::invalid_argument("dimension mismatch");
}

double RegularizedOracle::penalty(const Eigen::VectorXd& x) const {
  const double excess = norm_of(x - center_, norm_) - radius_;
  return excess > 0 ? 2.0 * inner_.lipschitz() * excess : 0.0;
}

Eigen::VectorXd RegularizedOracle::penalty_subgradient(const Eigen::VectorXd& x) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim());
  const Eigen::VectorXd d = x - center_;
  if (norm_of(d, norm_) <= radius_) return v;
  if (norm_ == Norm::kL2) {
    v = d / d.norm();
  } else {
    // one max-magnitude coordinate, smallest index on ties
    int arg = 0;
    for (int i = 1; i < d.size(); ++i) {
      if (std::abs(d[i]) > std::abs(d[arg])) arg = i;
    }
    v[arg] = d[arg] >= 0 ? 1.0 : -1.0;
  }
  return v;
}

std::vector<GradSample> RegularizedOracle::sample_round(
    const std::vector<Eigen::VectorXd>& points, Rng& rng) {
  std::vector<GradSample> samples = inner_.sample_round(points, rng);
  const double two_l = 2.0 * inner_.lipschitz();
  for (std::size_t k = 0; k < points.size(); ++k) {
    samples[k].grad += two_l * penalty_subgradient(points[k]);
    if (samples[k].has_value()) samples[k].value += penalty(points[k]);
  }
  return samples;
}

}  // namespace parsfm
