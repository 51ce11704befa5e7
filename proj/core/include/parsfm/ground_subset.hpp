#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parsfm {

// Subset of the ground set {0, ..., n-1}, stored as a fixed-width bit vector.
// A single inline word covers n <= 64 without heap traffic; larger ground
// sets spill into a tail vector. Equality and hashing are bit-exact.
class GroundSubset {
 public:
  GroundSubset() = default;
  explicit GroundSubset(int n);
  static GroundSubset from_mask(int n, std::uint64_t mask);
  static GroundSubset from_members(int n, const std::vector<int>& members);
  static GroundSubset full(int n);

  int n() const { return n_; }
  bool test(int i) const;
  void set(int i, bool value = true);
  GroundSubset with(int i) const;     // copy with element i added
  GroundSubset without(int i) const;  // copy with element i removed
  int count() const;                  // popcount
  bool empty() const { return count() == 0; }

  GroundSubset union_with(const GroundSubset& other) const;
  bool is_subset_of(const GroundSubset& other) const;

  // Numeric value of the bit pattern; only valid for n <= 64.
  std::uint64_t mask64() const;
  std::vector<int> members() const;
  std::string to_string() const;  // "{0,2,5}"

  bool operator==(const GroundSubset& other) const;
  bool operator!=(const GroundSubset& other) const { return !(*this == other); }
  // Orders subsets by their bit pattern read as an integer (word 0 least
  // significant). Used for canonical enumeration order.
  bool operator<(const GroundSubset& other) const;

  std::size_t hash() const;

 private:
  int words() const { return n_ <= 64 ? 1 : (n_ + 63) / 64; }
  std::uint64_t word(int w) const { return w == 0 ? head_ : tail_[w - 1]; }
  std::uint64_t& word_ref(int w) { return w == 0 ? head_ : tail_[w - 1]; }
  void check_index(int i) const;

  int n_ = 0;
  std::uint64_t head_ = 0;
  std::vector<std::uint64_t> tail_;  // words 1.. for n > 64
};

struct GroundSubsetHash {
  std::size_t operator()(const GroundSubset& s) const { return s.hash(); }
};

}  // namespace parsfm
