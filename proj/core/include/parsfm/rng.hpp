#pragma once

#include <cstdint>
#include <random>

namespace parsfm {

// Seeded generator with deterministic stream splitting. split(i) derives an
// independent child keyed only by (seed, stream, i), never by draw history,
// so per-sample streams are identical whether samples run serially or fanned
// out across workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return gen_(); }
  double uniform();                    // [0, 1)
  double normal();                     // standard normal
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // inclusive

  Rng split(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::mt19937_64 gen_;
};

}  // namespace parsfm
