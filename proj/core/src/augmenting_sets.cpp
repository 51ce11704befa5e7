#include "parsfm/augmenting_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace parsfm {

namespace {

// All bitmasks over n elements with popcount <= cap, ascending as integers.
// Gosper's hack walks each fixed size; one sort interleaves the sizes.
std::vector<std::uint64_t> seed_masks(int n, int cap) {
  std::vector<std::uint64_t> masks{0};
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (int k = 1; k <= cap; ++k) {
    std::uint64_t m = (std::uint64_t{1} << k) - 1;
    while (m < limit) {
      masks.push_back(m);
      const std::uint64_t c = m & (~m + 1);
      const std::uint64_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  std::sort(masks.begin(), masks.end());
  return masks;
}

}  // namespace

GroundSubset augment(const SubmodularInstance& instance, EvaluationOracle& oracle,
                     const GroundSubset& seed) {
  const int n = instance.n();
  QueryBatch batch;
  batch.subsets.push_back(seed);
  for (int i = 0; i < n; ++i) {
    if (!seed.test(i)) batch.subsets.push_back(seed.with(i));
  }
  const std::vector<std::int64_t> values = oracle.evaluate(batch);

  GroundSubset out = seed;
  std::size_t pos = 1;
  for (int i = 0; i < n; ++i) {
    if (seed.test(i)) continue;
    if (values[pos++] <= values[0]) out.set(i);
  }
  return out;
}

SfmResult augmenting_sets(const SubmodularInstance& instance, OracleLedger& ledger,
                          std::vector<AugmentationRecord>* records, bool memoize) {
  const int n = instance.n();
  if (n > 60) {
    throw std::invalid_argument("two-round solver supports n <= 60, got n=" +
                                std::to_string(n));
  }
  const int cap = static_cast<int>(
      std::min<std::int64_t>(instance.range_bound(), n));
  const std::vector<std::uint64_t> seeds = seed_masks(n, cap);

  // Round one evaluates each seed next to all its one-element extensions, so
  // it needs at most (n + 1) * #seeds slots. Refuse sizes that would not fit
  // in memory; the query count is the cost of exactness in two rounds.
  if (seeds.size() > (std::size_t{1} << 25) / static_cast<std::size_t>(n + 1)) {
    throw std::invalid_argument(
        "two-round solver batch would exceed 2^25 queries (n=" +
        std::to_string(n) + ", M=" + std::to_string(instance.range_bound()) + ")");
  }

  EvaluationOracle oracle(instance, ledger, memoize);

  QueryBatch round1;
  round1.subsets.reserve(seeds.size() * static_cast<std::size_t>(n + 1));
  for (const std::uint64_t m : seeds) {
    round1.subsets.push_back(GroundSubset::from_mask(n, m));
    for (int i = 0; i < n; ++i) {
      if (!(m >> i & 1)) {
        round1.subsets.push_back(GroundSubset::from_mask(n, m | (std::uint64_t{1} << i)));
      }
    }
  }
  const std::vector<std::int64_t> v1 = oracle.evaluate(round1);

  // Decode round one in the same order it was laid out and build each
  // augmented set: keep every extension that does not increase the value.
  std::vector<AugmentationRecord> recs(seeds.size());
  QueryBatch round2;
  round2.subsets.reserve(seeds.size());
  std::size_t pos = 0;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    const std::uint64_t m = seeds[s];
    const std::int64_t base = v1[pos++];
    std::uint64_t aug = m;
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1) continue;
      if (v1[pos++] <= base) aug |= std::uint64_t{1} << i;
    }
    recs[s].seed = GroundSubset::from_mask(n, m);
    recs[s].augmented = GroundSubset::from_mask(n, aug);
    round2.subsets.push_back(recs[s].augmented);
  }
  const std::vector<std::int64_t> v2 = oracle.evaluate(round2);

  std::size_t best = 0;
  for (std::size_t s = 0; s < recs.size(); ++s) {
    recs[s].value = v2[s];
    if (v2[s] < v2[best]) best = s;
  }

  SfmResult result;
  result.set = recs[best].augmented;
  result.value = recs[best].value;
  result.ledger = ledger;
  result.method = "augmenting-sets";
  if (records != nullptr) *records = std::move(recs);
  return result;
}

GroundSubset build_anchor(const SubmodularInstance& instance,
                          const GroundSubset& target) {
  GroundSubset anchor(instance.n());
  std::int64_t current = 0;  // f of the empty set
  for (const int i : target.members()) {
    const GroundSubset extended = anchor.with(i);
    const std::int64_t value = instance.value(extended);
    if (value > current) {
      anchor = extended;
      current = value;
    }
  }
  return anchor;
}

SfmResult exhaustive_one_round(const SubmodularInstance& instance,
                               OracleLedger& ledger, bool memoize) {
  const int n = instance.n();
  if (n > 20) {
    throw std::invalid_argument("one-round exhaustive solver supports n <= 20, got n=" +
                                std::to_string(n));
  }
  EvaluationOracle oracle(instance, ledger, memoize);

  QueryBatch batch;
  batch.subsets.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    batch.subsets.push_back(GroundSubset::from_mask(n, m));
  }
  const std::vector<std::int64_t> values = oracle.evaluate(batch);

  std::size_t best = 0;
  for (std::size_t m = 1; m < values.size(); ++m) {
    if (values[m] < values[best]) best = m;
  }

  SfmResult result;
  result.set = GroundSubset::from_mask(n, static_cast<std::uint64_t>(best));
  result.value = values[best];
  result.ledger = ledger;
  result.method = "brute-force";
  return result;
}

}  // namespace parsfm
