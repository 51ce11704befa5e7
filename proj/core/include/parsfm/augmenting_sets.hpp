#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parsfm/oracle.hpp"

namespace parsfm {

struct AugmentationRecord {
  GroundSubset seed;       // S, |S| <= M
  GroundSubset augmented;  // A(S) = S + every i with f(S + i) <= f(S)
  std::int64_t value = 0;  // f(A(S))
};

struct SfmResult {
  GroundSubset set;
  std::int64_t value = 0;
  OracleLedger ledger;
  std::string method;
  // Re-verification queries made directly against the instance, outside the
  // ledger. raw payload evaluations == total_queries + audit_queries must
  // hold after any solver run.
  std::int64_t audit_queries = 0;

  // Convex pipeline diagnostics (zero / empty for combinatorial solvers).
  std::int64_t outer_iters = 0;
  std::int64_t ball_calls = 0;
  std::int64_t grad_samples = 0;
  std::int64_t solves = 0;
  std::string stop_reason;
};

// Exact minimizer in exactly two parallel rounds. Round one evaluates every
// seed S with |S| <= M together with all its single-element extensions;
// round two evaluates the augmented sets A(S). Since some minimizer has a
// witness seed with at most M elements, the best A(S) is the global minimum.
// Query count is at most sum_{k<=M} C(n,k) (n+2).
SfmResult augmenting_sets(const SubmodularInstance& instance, OracleLedger& ledger,
                          std::vector<AugmentationRecord>* records = nullptr,
                          bool memoize = false);

// Greedy witness for a target set: scan its elements in ascending order and
// keep the ones with a strictly positive marginal. The result T satisfies
// |T| <= f(T) <= M, and A(T) recovers the target when the target is the
// maximal minimizer. Uses direct instance access (verification helper, not a
// metered solver).
GroundSubset build_anchor(const SubmodularInstance& instance,
                          const GroundSubset& target);

// Augmented set A(S) computed through the oracle (one round of n - |S| + 1
// queries plus membership lookups); exposed for tests.
GroundSubset augment(const SubmodularInstance& instance, EvaluationOracle& oracle,
                     const GroundSubset& seed);

// The trivial one-round algorithm: all 2^n values in a single batch. Only
// for n <= 20; exists as the round-complexity baseline and the CLI's
// brute-force solver.
SfmResult exhaustive_one_round(const SubmodularInstance& instance,
                               OracleLedger& ledger, bool memoize = false);

}  // namespace parsfm
