#include "parsfm/first_order.hpp"

#include <stdexcept>

namespace parsfm {

GradSample FirstOrderOracle::sample(const Eigen::VectorXd& x, Rng& rng) {
  return sample_round({x}, rng)[0];
}

FunctionOracle::FunctionOracle(int dim, ValueFn value, GradFn grad, double lipschitz,
                               double noise_std)
    : dim_(dim), value_(std::move(value)), grad_(std::move(grad)),
      lipschitz_(lipschitz), noise_std_(noise_std),
      second_moment_(lipschitz * lipschitz + noise_std * noise_std * dim) {
  if (dim < 1) throw std::invalid_argument("oracle dimension must be positive");
  if (lipschitz <= 0) throw std::invalid_argument("Lipschitz bound must be positive");
}

std::vector<GradSample> FunctionOracle::sample_round(
    const std::vector<Eigen::VectorXd>& points, Rng& rng) {
  if (points.empty()) throw std::invalid_argument("empty sample round");
  std::vector<GradSample> out(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].size() != dim_) throw std::invalid_argument("point dimension mismatch");
    GradSample& s = out[k];
    s.value = value_ ? value_(points[k]) : std::numeric_limits<double>::quiet_NaN();
    s.grad = grad_(points[k]);
    if (noise_std_ > 0) {
      Rng child = rng.split(sample_counter_ + k);
      for (int i = 0; i < dim_; ++i) s.grad[i] += noise_std_ * child.normal();
    }
  }
  sample_counter_ += points.size();
  stats_.rounds += 1;
  stats_.samples += static_cast<std::int64_t>(points.size());
  return out;
}

}  // namespace parsfm
