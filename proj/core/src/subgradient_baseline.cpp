#include "parsfm/subgradient_baseline.hpp"

#include <cmath>
#include <stdexcept>

namespace parsfm {

BaselineResult subgradient_baseline(const SubmodularInstance& instance,
                                    OracleLedger& ledger, int rounds) {
  if (rounds < 1) throw std::invalid_argument("baseline needs at least one round");
  const int n = instance.n();
  const double m = static_cast<double>(instance.range_bound());

  EvaluationOracle oracle(instance, ledger);
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 0.5);

  BaselineResult result;
  result.best_set = GroundSubset(n);
  result.best_value = 0;  // the empty prefix is always available
  result.best_by_round.reserve(static_cast<std::size_t>(rounds));

  for (int t = 0; t < rounds; ++t) {
    const ChainDecomposition chain = chain_decompose(x, oracle);
    const auto [set, value] = threshold_round(chain);
    if (value < result.best_value) {
      result.best_set = set;
      result.best_value = value;
    }
    result.best_by_round.push_back(result.best_value);
    result.extension_by_round.push_back(lovasz_value(chain, x));

    const Eigen::VectorXd g = lovasz_subgradient(chain);
    const double step = (std::sqrt(static_cast<double>(n)) / 2.0) /
                        (3.0 * m * std::sqrt(static_cast<double>(t) + 1.0));
    x = (x - step * g).cwiseMax(0.0).cwiseMin(1.0);
  }

  result.ledger = ledger;
  return result;
}

}  // namespace parsfm
