#include <doctest.h>

#include <parsfm/generators.hpp>
#include <parsfm/instance.hpp>
#include <parsfm/lovasz.hpp>
#include <parsfm/rng.hpp>

#include <cmath>
#include <vector>

using namespace parsfm;

namespace {

SubmodularInstance edge_instance() {
  GraphCutPayload payload;
  payload.edges.push_back({0, 1, 1});
  return make_instance(InstanceKind::kGraphCut, 2, payload);
}

SubmodularInstance example_e4() {
  CutMinusModularPayload payload;
  payload.edges.push_back({0, 1, 1});
  payload.modular = {0, 0, 1, 0};
  return make_instance(InstanceKind::kCutMinusModular, 4, payload);
}

Eigen::VectorXd point(std::initializer_list<double> coords) {
  Eigen::VectorXd x(static_cast<int>(coords.size()));
  int i = 0;
  for (double c : coords) x[i++] = c;
  return x;
}

Eigen::VectorXd random_point(int n, Rng& rng, double lo, double hi) {
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = lo + (hi - lo) * rng.uniform();
  return x;
}

}  // namespace

TEST_SUITE("lovasz") {

TEST_CASE("chain at a sorted point") {
  const auto inst = edge_instance();
  OracleLedger ledger;
  EvaluationOracle oracle(inst, ledger);

  const auto chain = chain_decompose(point({0.7, 0.3}), oracle);
  CHECK(chain.pi == std::vector<int>{0, 1});
  CHECK(chain.prefix_values == std::vector<std::int64_t>{0, 1, 0});
  CHECK(ledger.rounds == 1);
  CHECK(ledger.total_queries == 2);
}

TEST_CASE("ties order ascending indices first") {
  const auto inst = edge_instance();
  OracleLedger ledger;
  EvaluationOracle oracle(inst, ledger);
  const auto chain = chain_decompose(point({0.5, 0.5}), oracle);
  CHECK(chain.pi == std::vector<int>{0, 1});

  const auto order = chain_order(point({0.3, 0.7, 0.3, 0.7}));
  CHECK(order == std::vector<int>{1, 3, 0, 2});
}

TEST_CASE("indicator chains pass through their set") {
  const auto inst = example_e4();
  OracleLedger ledger;
  EvaluationOracle oracle(inst, ledger);
  const auto s = GroundSubset::from_members(4, {1, 3});
  Eigen::VectorXd x = Eigen::VectorXd::Zero(4);
  for (int i : s.members()) x[i] = 1.0;

  const auto chain = chain_decompose(x, oracle);
  // The first |S| prefix elements enumerate S itself.
  GroundSubset prefix(4);
  for (int j = 0; j < s.count(); ++j) prefix = prefix.with(chain.pi[j]);
  CHECK(prefix == s);
  CHECK(chain.prefix_values[s.count()] == inst.value(s));
}

TEST_CASE("extension value interpolates hand-computed cases") {
  const auto inst = edge_instance();
  OracleLedger ledger;
  EvaluationOracle oracle(inst, ledger);

  const auto x = point({0.7, 0.3});
  const auto chain = chain_decompose(x, oracle);
  CHECK(lovasz_value(chain, x) == doctest::Approx(0.4).epsilon(1e-12));

  const auto e4 = example_e4();
  EvaluationOracle oracle4(e4, ledger);
  const auto y = point({0.0, 0.0, 1.0, 0.0});
  CHECK(lovasz_value(chain_decompose(y, oracle4), y) == doctest::Approx(-1.0));

  const auto zero = Eigen::VectorXd::Zero(2).eval();
  CHECK(lovasz_value(chain_decompose(zero, oracle), zero) == doctest::Approx(0.0));
}

TEST_CASE("extension agrees with f on every indicator") {
  OracleLedger ledger;
  for (auto kind : {InstanceKind::kCutMinusModular, InstanceKind::kCoverage,
                    InstanceKind::kExplicitTable}) {
    const auto inst = random_instance(kind, 7, 3, 11);
    EvaluationOracle oracle(inst, ledger);
    for (std::uint64_t mask = 0; mask < (1u << 7); ++mask) {
      const auto s = GroundSubset::from_mask(7, mask);
      Eigen::VectorXd x = Eigen::VectorXd::Zero(7);
      for (int i : s.members()) x[i] = 1.0;
      const auto chain = chain_decompose(x, oracle);
      const double value = lovasz_value(chain, x);
      // Prefix sums of small integers are exact in doubles, so this holds
      // with no tolerance at all.
      CHECK(value == double(inst.value(s)));
    }
  }
}

TEST_CASE("subgradient matches the hand-computed edge case") {
  const auto inst = edge_instance();
  OracleLedger ledger;
  EvaluationOracle oracle(inst, ledger);
  const auto chain = chain_decompose(point({0.7, 0.3}), oracle);
  const auto g = lovasz_subgradient(chain);
  CHECK(g[0] == doctest::Approx(1.0));
  CHECK(g[1] == doctest::Approx(-1.0));
  CHECK(g.cwiseAbs().sum() == doctest::Approx(2.0));
}

TEST_CASE("zero function has zero subgradients everywhere") {
  const auto inst = make_instance(InstanceKind::kGraphCut, 5, GraphCutPayload{});
  OracleLedger ledger;
  EvaluationOracle oracle(inst, ledger);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_point(5, rng, -2.0, 2.0);
    const auto g = lovasz_subgradient(chain_decompose(x, oracle));
    CHECK(g.norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("perturbing a coordinate to the front isolates its marginal") {
  const auto inst = example_e4();
  OracleLedger ledger;
  EvaluationOracle oracle(inst, ledger);
  // Coordinate 2 strictly largest: its subgradient entry is f({2}) - f({}).
  const auto x = point({0.9, 0.9, 1.0, 0.9});
  const auto g = lovasz_subgradient(chain_decompose(x, oracle));
  CHECK(g[2] == doctest::Approx(-1.0));
}

TEST_CASE("subgradient inequality, l1 bound, and positive-entry sparsity") {
  Rng rng(17);
  for (auto kind : {InstanceKind::kCutMinusModular, InstanceKind::kCoverage}) {
    const auto inst = random_instance(kind, 8, 3, 5);
    const double m = double(inst.range_bound());
    OracleLedger ledger;
    EvaluationOracle oracle(inst, ledger);
    for (int t = 0; t < 250; ++t) {
      const auto x = random_point(8, rng, -1.5, 1.5);
      const auto y = random_point(8, rng, -1.5, 1.5);
      const auto cx = chain_decompose(x, oracle);
      const auto cy = chain_decompose(y, oracle);
      const auto g = lovasz_subgradient(cx);

      const double slack =
          lovasz_value(cy, y) - lovasz_value(cx, x) - g.dot(y - x);
      CHECK(slack >= -1e-12);
      CHECK(g.cwiseAbs().sum() <= 3.0 * m + 1e-12);
      int positive = 0;
      for (int i = 0; i < 8; ++i) positive += g[i] > 0.0;
      CHECK(positive <= m);
    }
  }
}

TEST_CASE("threshold rounding returns the best prefix, smallest index on ties") {
  const auto inst = edge_instance();
  OracleLedger ledger;
  EvaluationOracle oracle(inst, ledger);
  const auto chain = chain_decompose(point({0.7, 0.3}), oracle);
  const auto [set, value] = threshold_round(chain);
  CHECK(value == 0);
  CHECK(set.empty());  // prefixes {} and {0,1} tie at 0; smallest j wins
}

TEST_CASE("rounding an indicator of a minimizer returns its value") {
  const auto inst = example_e4();
  OracleLedger ledger;
  EvaluationOracle oracle(inst, ledger);
  const auto x = point({0.0, 0.0, 1.0, 0.0});
  const auto [set, value] = threshold_round(chain_decompose(x, oracle));
  CHECK(value == -1);
  CHECK(set == GroundSubset::from_members(4, {2}));
}

TEST_CASE("rounding never exceeds the extension value on the unit box") {
  Rng rng(23);
  const auto inst = example_e4();
  OracleLedger ledger;
  EvaluationOracle oracle(inst, ledger);
  for (int t = 0; t < 200; ++t) {
    const auto x = random_point(4, rng, 0.0, 1.0);
    const auto chain = chain_decompose(x, oracle);
    const auto [set, value] = threshold_round(chain);
    CHECK(double(value) <= lovasz_value(chain, x) + 1e-12);
    CHECK(inst.value(set) == value);
  }
}

TEST_CASE("batched decomposition is one round and matches per-point chains") {
  const auto inst = random_instance(InstanceKind::kCutMinusModular, 6, 2, 9);
  Rng rng(31);
  std::vector<Eigen::VectorXd> points;
  for (int t = 0; t < 5; ++t) points.push_back(random_point(6, rng, -1.0, 2.0));

  OracleLedger batched_ledger;
  EvaluationOracle batched(inst, batched_ledger);
  const auto chains = chain_decompose_many(points, batched);
  CHECK(batched_ledger.rounds == 1);
  CHECK(batched_ledger.total_queries == 5 * 6);

  OracleLedger single_ledger;
  EvaluationOracle single(inst, single_ledger);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto chain = chain_decompose(points[k], single);
    CHECK(chain.pi == chains[k].pi);
    CHECK(chain.prefix_values == chains[k].prefix_values);
  }
  CHECK(single_ledger.rounds == 5);
}

}  // TEST_SUITE
