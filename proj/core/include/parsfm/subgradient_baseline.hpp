#pragma once

#include <cstdint>
#include <vector>

#include "parsfm/lovasz.hpp"

namespace parsfm {

struct BaselineResult {
  GroundSubset best_set;
  std::int64_t best_value = 0;
  // Running best rounded value after each round; best_by_round[t] is the
  // incumbent once t + 1 chains have been queried. This is what round-count
  // comparisons against the accelerated solver read off.
  std::vector<std::int64_t> best_by_round;
  // Extension value at each iterate, for matched-accuracy comparisons on the
  // continuous objective (first round where the gap crosses a target).
  std::vector<double> extension_by_round;
  OracleLedger ledger;
};

// Plain projected subgradient descent on the interpolated extension over
// [0,1]^n, started at the box center with the classic diminishing step
// (sqrt(n)/2) / (3M sqrt(t+1)). One iteration is one chain, so one parallel
// round of n queries; the best prefix of each chain is tracked for free.
// Sequential by construction: the comparison yardstick for the batched
// solvers, not a contender.
BaselineResult subgradient_baseline(const SubmodularInstance& instance,
                                    OracleLedger& ledger, int rounds);

}  // namespace parsfm
