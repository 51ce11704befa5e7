// Micro benchmarks for the hot paths: raw batched evaluation, chain
// decomposition, the two-round solver, and the stochastic ball oracle.

#include <benchmark/benchmark.h>

#include <Eigen/Core>

#include <parsfm/augmenting_sets.hpp>
#include <parsfm/ball_oracle.hpp>
#include <parsfm/first_order.hpp>
#include <parsfm/generators.hpp>
#include <parsfm/lovasz.hpp>
#include <parsfm/oracle.hpp>
#include <parsfm/rng.hpp>

namespace {

using namespace parsfm;

void BM_EvaluateBatch(benchmark::State& state) {
  const int n = int(state.range(0));
  const SubmodularInstance inst =
      random_instance(InstanceKind::kCoverage, n, 3, 42);
  Rng rng(7);
  QueryBatch batch;
  for (int i = 0; i < 4096; ++i) {
    batch.subsets.push_back(GroundSubset::from_mask(
        n, rng.next_u64() & ((std::uint64_t{1} << n) - 1)));
  }
  for (auto _ : state) {
    OracleLedger ledger;
    EvaluationOracle oracle(inst, ledger);
    benchmark::DoNotOptimize(oracle.evaluate(batch));
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_EvaluateBatch)->Arg(8)->Arg(14);

void BM_ChainDecomposeMany(benchmark::State& state) {
  const int n = 12;
  const SubmodularInstance inst =
      random_instance(InstanceKind::kCutMinusModular, n, 3, 43);
  Rng rng(9);
  std::vector<Eigen::VectorXd> points;
  for (int p = 0; p < 256; ++p) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = 2.0 * rng.uniform() - 1.0;
    points.push_back(std::move(x));
  }
  for (auto _ : state) {
    OracleLedger ledger;
    EvaluationOracle oracle(inst, ledger);
    benchmark::DoNotOptimize(chain_decompose_many(points, oracle));
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_ChainDecomposeMany);

void BM_AugmentingSets(benchmark::State& state) {
  const SubmodularInstance inst =
      random_instance(InstanceKind::kCutMinusModular, 12, 2, 44);
  for (auto _ : state) {
    OracleLedger ledger;
    benchmark::DoNotOptimize(augmenting_sets(inst, ledger));
  }
}
BENCHMARK(BM_AugmentingSets);

void BM_BallOptimize(benchmark::State& state) {
  const int n = 10;
  Rng setup(11);
  Eigen::VectorXd anchor(n), center(n);
  for (int i = 0; i < n; ++i) {
    anchor[i] = 2.0 * setup.uniform() - 1.0;
    center[i] = 0.5 * setup.uniform();
  }
  FunctionOracle oracle(
      n,
      [&](const Eigen::VectorXd& x) { return 0.5 * (x - anchor).squaredNorm(); },
      [&](const Eigen::VectorXd& x) { return Eigen::VectorXd(x - anchor); },
      3.0, 0.25);
  BallOracleParams params;
  params.phi = 0.01;
  params.lambda = 2.0;
  params.radius = 0.5;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(++seed);
    benchmark::DoNotOptimize(ball_optimize(oracle, center, params, rng));
  }
}
BENCHMARK(BM_BallOptimize);

}  // namespace

BENCHMARK_MAIN();
