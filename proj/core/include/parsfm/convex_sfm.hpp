#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "parsfm/augmenting_sets.hpp"
#include "parsfm/linf_solver.hpp"
#include "parsfm/lovasz.hpp"

namespace parsfm {

// First-order view of the interpolated extension composed with an affine map:
//
//   h(x) = value_scale * ext(input_scale * x + input_offset * ones)
//
// The greedy subgradient has l_1 norm at most 3M at any point, so h is
// (3M * |value_scale| * |input_scale|)-Lipschitz in the l_inf sense and the
// oracle is deterministic (second moment = Lipschitz^2). One sample_round is
// one evaluation round of points.size() * n queries through the meter.
class LovaszExtensionOracle : public FirstOrderOracle {
 public:
  LovaszExtensionOracle(const SubmodularInstance& instance, OracleLedger& ledger,
                        double input_scale = 1.0, double input_offset = 0.0,
                        double value_scale = 1.0, bool memoize = false);

  int dim() const override { return instance_.n(); }
  double lipschitz() const override { return lipschitz_; }
  double second_moment() const override { return lipschitz_ * lipschitz_; }
  FirstOrderStats stats() const override { return stats_; }
  std::vector<GradSample> sample_round(const std::vector<Eigen::VectorXd>& points,
                                       Rng& rng) override;

  // Chain at the mapped point and its best prefix: one evaluation round of n
  // queries, counted as one sample in stats(). The value is in instance units.
  std::pair<GroundSubset, std::int64_t> round_point(const Eigen::VectorXd& x);

  Eigen::VectorXd mapped(const Eigen::VectorXd& x) const;
  EvaluationOracle& oracle() { return oracle_; }

 private:
  const SubmodularInstance& instance_;
  EvaluationOracle oracle_;
  double input_scale_;
  double input_offset_;
  double value_scale_;
  double lipschitz_;
  FirstOrderStats stats_;
};

struct SublinearConfig {
  double eps = 0.0;      // target gap for the rescaled extension; 0 picks 1/(12M)
  int max_attempts = 3;  // independent solves before settling for the best seen
  bool memoize = false;
  SolverConfig solver;
};

// Exact minimizer through the continuous route: minimize
// h(x) = ext(x/2 + 1/2) / (3M) over the unit l_inf box, pull the solution
// back into [0,1]^n, take the best prefix of its chain. Each attempt that
// fails to reproduce the best value so far triggers a fresh solve with a
// shifted seed, up to max_attempts. Rounds scale as ~n^(1/3) M^(2/3) times
// polylog factors; queries stay polynomial.
SfmResult sublinear_sfm(const SubmodularInstance& instance, OracleLedger& ledger,
                        const SublinearConfig& config = {});

struct ApproxConfig {
  double eps = 0.0;          // relative target: |f(S) - min f| <= eps * M; 0 picks 1/(2M)
  double value_scale = 1.0;  // instance units per integer value (real-valued inputs)
  bool memoize = false;
  SolverConfig solver;
};

// Single-shot eps*M-approximate minimizer: penalty-regularize the extension
// onto [0,1]^n, run the unconstrained solver over the radius-sqrt(n) ball,
// project back into the box, round the one final chain.
SfmResult approx_sfm(const SubmodularInstance& instance, OracleLedger& ledger,
                     const ApproxConfig& config = {});

}  // namespace parsfm
