#pragma once

#include <cstdint>

#include "parsfm/instance.hpp"
#include "parsfm/rng.hpp"

namespace parsfm {

// Seeded random instance of the given kind with 1 <= max |f| <= target_m.
// Rejection-samples payloads until the exhaustively computed range bound
// lands in range, so it requires n <= 20 (desk scale).
SubmodularInstance random_instance(InstanceKind kind, int n, std::int64_t target_m,
                                   std::uint64_t seed);

}  // namespace parsfm
