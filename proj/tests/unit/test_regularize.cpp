#include <doctest.h>

#include <parsfm/first_order.hpp>
#include <parsfm/regularize.hpp>
#include <parsfm/rng.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace parsfm;

namespace {

Eigen::VectorXd point(std::initializer_list<double> coords) {
  Eigen::VectorXd x(static_cast<int>(coords.size()));
  int i = 0;
  for (double c : coords) x[i++] = c;
  return x;
}

// max(|x0 - 1|, |x1 + 0.5|): piecewise linear, Lipschitz 1 in l_inf.
FunctionOracle vee_oracle() {
  auto value = [](const Eigen::VectorXd& x) {
    return std::max(std::abs(x[0] - 1.0), std::abs(x[1] + 0.5));
  };
  auto grad = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(2);
    if (std::abs(x[0] - 1.0) >= std::abs(x[1] + 0.5))
      g[0] = x[0] >= 1.0 ? 1.0 : -1.0;
    else
      g[1] = x[1] >= -0.5 ? 1.0 : -1.0;
    return g;
  };
  return FunctionOracle(2, value, grad, 1.0);
}

double reg_value(FunctionOracle& inner, RegularizedOracle& reg,
                 const Eigen::VectorXd& x, Rng& rng) {
  return reg.sample_round({x}, rng)[0].value;
}

}  // namespace

TEST_SUITE("regularize") {

TEST_CASE("closed-ball pullback, euclidean") {
  const auto c0 = Eigen::VectorXd::Zero(2).eval();
  const auto p = project_to_ball(point({2.0, 0.0}), c0, 1.0, Norm::kL2);
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(0.0));
}

TEST_CASE("closed-ball pullback, max norm") {
  const auto c0 = Eigen::VectorXd::Zero(2).eval();
  const auto p = project_to_ball(point({2.0, 2.0}), c0, 1.0, Norm::kLinf);
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(1.0));
}

TEST_CASE("pullback onto the unit box seen as a max-norm ball") {
  const auto c = (Eigen::VectorXd::Ones(3) * 0.5).eval();
  const auto y = (Eigen::VectorXd::Ones(3) * 1.5).eval();
  const auto p = project_to_ball(y, c, 0.5, Norm::kLinf);
  for (int i = 0; i < 3; ++i) CHECK(p[i] == doctest::Approx(1.0));
  CHECK(norm_of(p - c, Norm::kLinf) == doctest::Approx(0.5));
}

TEST_CASE("pullback lands exactly on the sphere and stays on the segment") {
  Rng rng(5);
  const auto c = point({0.3, -0.2, 0.1});
  for (auto norm : {Norm::kL2, Norm::kLinf}) {
    for (int t = 0; t < 50; ++t) {
      Eigen::VectorXd y(3);
      for (int i = 0; i < 3; ++i) y[i] = 4.0 * (rng.uniform() - 0.5);
      if (norm_of(y - c, norm) < 0.5) continue;
      const auto p = project_to_ball(y, c, 0.5, norm);
      CHECK(norm_of(p - c, norm) == doctest::Approx(0.5).epsilon(1e-12));
      // p - c and y - c are parallel with a positive ratio.
      const double ratio = (y - c).norm() / (p - c).norm();
      CHECK(((p - c) * ratio - (y - c)).norm() == doctest::Approx(0.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("points inside the open ball are rejected") {
  const auto c0 = Eigen::VectorXd::Zero(2).eval();
  CHECK_THROWS_AS(project_to_ball(point({0.1, 0.0}), c0, 1.0, Norm::kL2),
                  std::invalid_argument);
  CHECK_THROWS_AS(project_to_ball(point({2.0, 0.0}), c0, 0.0, Norm::kL2),
                  std::invalid_argument);
  // Boundary points are fine.
  const auto p = project_to_ball(point({1.0, 0.0}), c0, 1.0, Norm::kL2);
  CHECK(p[0] == doctest::Approx(1.0));
}

TEST_CASE("penalty of the constant function") {
  auto zero_fn = [](const Eigen::VectorXd&) { return 0.0; };
  auto zero_grad = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd::Zero(x.size()).eval();
  };
  FunctionOracle inner(2, zero_fn, zero_grad, 1.0);
  RegularizedOracle reg(inner, Eigen::VectorXd::Zero(2), 1.0, Norm::kL2);

  Rng rng(1);
  // ||x|| = 3: value is 2 L (3 - 1) = 4.
  CHECK(reg_value(inner, reg, point({3.0, 0.0}), rng) == doctest::Approx(4.0));
  CHECK(reg.penalty(point({3.0, 0.0})) == doctest::Approx(4.0));
  CHECK(reg.penalty(point({0.5, 0.0})) == doctest::Approx(0.0));
}

TEST_CASE("moving an outside point onto the ball saves at least L times the gap") {
  auto inner = vee_oracle();
  Rng rng(7);
  const auto c = point({0.2, 0.1});
  const double r = 0.6;
  const double lips = inner.lipschitz();

  for (auto norm : {Norm::kL2, Norm::kLinf}) {
    RegularizedOracle reg(inner, c, r, norm);
    int outside_seen = 0;
    for (int t = 0; outside_seen < 500 && t < 5000; ++t) {
      Eigen::VectorXd y(2);
      for (int i = 0; i < 2; ++i) y[i] = 6.0 * (rng.uniform() - 0.5);
      const double dist = norm_of(y - c, norm);
      if (dist <= r) continue;
      ++outside_seen;
      const auto proj = project_to_ball(y, c, r, norm);
      const double at_y = reg_value(inner, reg, y, rng);
      const double at_proj = reg_value(inner, reg, proj, rng);
      CHECK(at_proj <= at_y - lips * (dist - r) + 1e-9);
    }
    CHECK(outside_seen == 500);
  }
}

TEST_CASE("regularized oracle is 3L-Lipschitz") {
  auto inner = vee_oracle();
  Rng rng(11);
  const auto c = point({0.0, 0.0});
  for (auto norm : {Norm::kL2, Norm::kLinf}) {
    RegularizedOracle reg(inner, c, 0.5, norm);
    CHECK(reg.lipschitz() == doctest::Approx(3.0 * inner.lipschitz()));
    for (int t = 0; t < 300; ++t) {
      Eigen::VectorXd x(2), y(2);
      for (int i = 0; i < 2; ++i) {
        x[i] = 4.0 * (rng.uniform() - 0.5);
        y[i] = 4.0 * (rng.uniform() - 0.5);
      }
      const double dv = std::abs(reg_value(inner, reg, x, rng) -
                                 reg_value(inner, reg, y, rng));
      CHECK(dv <= 3.0 * inner.lipschitz() * norm_of(x - y, norm) + 1e-9);
    }
  }
}

TEST_CASE("second moment budget follows the composition rule") {
  auto inner = vee_oracle();
  RegularizedOracle reg(inner, Eigen::VectorXd::Zero(2), 1.0, Norm::kL2);
  CHECK(reg.second_moment() ==
        doctest::Approx(2.0 * inner.second_moment() +
                        8.0 * inner.lipschitz() * inner.lipschitz()));
}

TEST_CASE("unconstrained minimum of the penalized function matches the ball minimum") {
  // Grid search both sides at desk resolution. min over the ball of the vee
  // function sits where |x0 - 1| meets the ball boundary.
  auto inner = vee_oracle();
  const auto c = point({0.0, 0.0});
  const double r = 0.5;
  RegularizedOracle reg(inner, c, r, Norm::kL2);
  Rng rng(13);

  auto raw = [](double a, double b) {
    return std::max(std::abs(a - 1.0), std::abs(b + 0.5));
  };

  const double step = 2e-3;
  double best_ball = 1e300;
  double best_reg = 1e300;
  for (double a = -1.2; a <= 1.2; a += step) {
    for (double b = -1.2; b <= 1.2; b += step) {
      const double dist = std::sqrt(a * a + b * b);
      const double value = raw(a, b) + 2.0 * std::max(0.0, dist - r);
      if (dist <= r) best_ball = std::min(best_ball, raw(a, b));
      best_reg = std::min(best_reg, value);
    }
  }
  CHECK(std::abs(best_reg - best_ball) <= 3.0 * inner.lipschitz() * step);

  // And the oracle agrees with the formula used in the scan.
  const auto probe = point({0.7, 0.1});
  const double expect = raw(probe[0], probe[1]) +
                        2.0 * std::max(0.0, probe.norm() - r);
  CHECK(reg_value(inner, reg, probe, rng) == doctest::Approx(expect));
}

TEST_CASE("nonpositive radii are rejected") {
  auto inner = vee_oracle();
  CHECK_THROWS_AS(
      RegularizedOracle(inner, Eigen::VectorXd::Zero(2), -1.0, Norm::kL2),
      std::invalid_argument);
}

}  // TEST_SUITE
