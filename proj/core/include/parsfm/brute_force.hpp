#pragma once

#include <cstdint>
#include <vector>

#include "parsfm/ground_subset.hpp"
#include "parsfm/instance.hpp"

namespace parsfm {

struct BruteForceResult {
  std::int64_t min_value = 0;
  // All minimizers in ascending bitmask order. Degenerate instances can have
  // exponentially many; the list is truncated once `list_cap` is hit and
  // minimizer_count keeps the true total either way.
  std::vector<GroundSubset> minimizers;
  std::int64_t minimizer_count = 0;
  // Union of all minimizers; itself a minimizer by submodularity.
  GroundSubset maximal_minimizer;
};

// Exhaustive reference minimizer, n <= 24. Evaluates the payload directly and
// deliberately bypasses the metered oracle: this is the independent check the
// solvers are graded against.
BruteForceResult brute_force_sfm(const SubmodularInstance& instance,
                                 std::int64_t list_cap = std::int64_t{1} << 22);

}  // namespace parsfm
