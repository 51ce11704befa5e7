#include "parsfm/brute_force.hpp"

#include <stdexcept>

namespace parsfm {

BruteForceResult brute_force_sfm(const SubmodularInstance& instance,
                                 std::int64_t list_cap) {
  const int n = instance.n();
  if (n > 24) throw std::invalid_argument("brute force limited to n <= 24");

  BruteForceResult result;
  result.min_value = instance.value(GroundSubset(n));  // f(empty) = 0
  std::uint64_t union_mask = 0;
  result.minimizers.push_back(GroundSubset(n));
  result.minimizer_count = 1;

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const std::int64_t v = instance.value(GroundSubset::from_mask(n, mask));
    if (v < result.min_value) {
      result.min_value = v;
      result.minimizers.clear();
      result.minimizer_count = 0;
      union_mask = 0;
    }
    if (v == result.min_value) {
      ++result.minimizer_count;
      union_mask |= mask;
      if (static_cast<std::int64_t>(result.minimizers.size()) < list_cap) {
        result.minimizers.push_back(GroundSubset::from_mask(n, mask));
      }
    }
  }

  result.maximal_minimizer = GroundSubset::from_mask(n, union_mask);
  return result;
}

}  // namespace parsfm
