#include "parsfm/lovasz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parsfm {

std::vector<int> chain_order(const Eigen::VectorXd& x) {
  std::vector<int> pi(x.size());
  std::iota(pi.begin(), pi.end(), 0);
  std::sort(pi.begin(), pi.end(), [&x](int a, int b) {
    if (x[a] != x[b]) return x[a] > x[b];
    return a < b;
  });
  return pi;
}

namespace {

void append_prefix_sets(const std::vector<int>& pi, int n, QueryBatch& batch) {
  GroundSubset prefix(n);
  for (int i = 0; i < n; ++i) {
    prefix.set(pi[i]);
    batch.subsets.push_back(prefix);
  }
}

ChainDecomposition assemble(std::vector<int> pi, const std::int64_t* values, int n) {
  ChainDecomposition chain;
  chain.pi = std::move(pi);
  chain.prefix_values.resize(n + 1);
  chain.prefix_values[0] = 0;  // f(empty), no query spent
  std::copy(values, values + n, chain.prefix_values.begin() + 1);
  return chain;
}

}  // namespace

ChainDecomposition chain_decompose(const Eigen::VectorXd& x, EvaluationOracle& oracle) {
  const int n = oracle.instance().n();
  if (x.size() != n) throw std::invalid_argument("point dimension != ground set size");

  std::vector<int> pi = chain_order(x);
  QueryBatch batch;
  batch.subsets.reserve(n);
  append_prefix_sets(pi, n, batch);
  std::vector<std::int64_t> values = oracle.evaluate(batch);
  return assemble(std::move(pi), values.data(), n);
}

std::vector<ChainDecomposition> chain_decompose_many(
    const std::vector<Eigen::VectorXd>& points, EvaluationOracle& oracle) {
  if (points.empty()) throw std::invalid_argument("no points to decompose");
  const int n = oracle.instance().n();

  QueryBatch batch;
  batch.subsets.reserve(points.size() * n);
  std::vector<std::vector<int>> orders;
  orders.reserve(points.size());
  for (const Eigen::VectorXd& x : points) {
    if (x.size() != n) throw std::invalid_argument("point dimension != ground set size");
    orders.push_back(chain_order(x));
    append_prefix_sets(orders.back(), n, batch);
  }

  std::vector<std::int64_t> values = oracle.evaluate(batch);
  std::vector<ChainDecomposition> chains;
  chains.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    chains.push_back(assemble(std::move(orders[k]), values.data() + k * n, n));
  }
  return chains;
}

double lovasz_value(const ChainDecomposition& chain, const Eigen::VectorXd& x) {
  const int n = static_cast<int>(chain.pi.size());
  if (x.size() != n) throw std::invalid_argument("point dimension != chain size");
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    total += x[chain.pi[i]] *
             static_cast<double>(chain.prefix_values[i + 1] - chain.prefix_values[i]);
  }
  return total;
}

Eigen::VectorXd lovasz_subgradient(const ChainDecomposition& chain) {
  const int n = static_cast<int>(chain.pi.size());
  Eigen::VectorXd g(n);
  for (int i = 0; i < n; ++i) {
    g[chain.pi[i]] =
        static_cast<double>(chain.prefix_values[i + 1] - chain.prefix_values[i]);
  }
  return g;
}

std::pair<GroundSubset, std::int64_t> threshold_round(const ChainDecomposition& chain) {
  const int n = static_cast<int>(chain.pi.size());
  int best_j = 0;
  for (int j = 1; j <= n; ++j) {
    if (chain.prefix_values[j] < chain.prefix_values[best_j]) best_j = j;
  }
  GroundSubset set(n);
  for (int i = 0; i < best_j; ++i) set.set(chain.pi[i]);
  return {set, chain.prefix_values[best_j]};
}

}  // namespace parsfm
