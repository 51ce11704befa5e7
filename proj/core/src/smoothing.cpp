#include "parsfm/smoothing.hpp"

#include <cmath>
#include <stdexcept>

namespace parsfm {

SmoothedOracle::SmoothedOracle(FirstOrderOracle& inner, double rho)
    : inner_(inner), rho_(rho) {
  if (rho <= 0) throw std::invalid_argument("smoothing radius must be positive");
}

std::vector<GradSample> SmoothedOracle::sample_round(
    const std::vector<Eigen::VectorXd>& points, Rng& rng) {
  std::vector<Eigen::VectorXd> perturbed;
  perturbed.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    Rng child = rng.split(sample_counter_ + k);
    Eigen::VectorXd shifted = points[k];
    for (int i = 0; i < shifted.size(); ++i) shifted[i] += rho_ * child.normal();
    perturbed.push_back(std::move(shifted));
  }
  sample_counter_ += points.size();
  return inner_.sample_round(perturbed, rng);
}

double smoothing_distortion_bound(double lipschitz, double rho, int n) {
  if (lipschitz < 0 || rho < 0) {
    throw std::invalid_argument("distortion bound needs lipschitz >= 0 and rho >= 0");
  }
  const double effective_n = n < 2 ? 2.0 : static_cast<double>(n);
  return lipschitz * rho * std::sqrt(2.0 * std::log(effective_n));
}

}  // namespace parsfm
