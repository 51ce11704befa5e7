#include "parsfm/ground_subset.hpp"

#include <bit>
#include <stdexcept>

namespace parsfm {

GroundSubset::GroundSubset(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ground set size must be positive");
  if (n > 64) tail_.assign((n + 63) / 64 - 1, 0);
}

GroundSubset GroundSubset::from_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > 64) throw std::invalid_argument("from_mask requires 1 <= n <= 64");
  if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("mask has bits beyond ground set");
  GroundSubset s(n);
  s.head_ = mask;
  return s;
}

GroundSubset GroundSubset::from_members(int n, const std::vector<int>& members) {
  GroundSubset s(n);
  for (int i : members) s.set(i);
  return s;
}

GroundSubset GroundSubset::full(int n) {
  GroundSubset s(n);
  for (int i = 0; i < n; ++i) s.set(i);
  return s;
}

void GroundSubset::check_index(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("element outside ground set");
}

bool GroundSubset::test(int i) const {
  check_index(i);
  return (word(i / 64) >> (i % 64)) & 1u;
}

void GroundSubset::set(int i, bool value) {
  check_index(i);
  std::uint64_t& w = word_ref(i / 64);
  if (value) {
    w |= std::uint64_t{1} << (i % 64);
  } else {
    w &= ~(std::uint64_t{1} << (i % 64));
  }
}

GroundSubset GroundSubset::with(int i) const {
  GroundSubset s = *this;
  s.set(i);
  return s;
}

GroundSubset GroundSubset::without(int i) const {
  GroundSubset s = *this;
  s.set(i, false);
  return s;
}

int GroundSubset::count() const {
  int c = std::popcount(head_);
  for (std::uint64_t w : tail_) c += std::popcount(w);
  return c;
}

GroundSubset GroundSubset::union_with(const GroundSubset& other) const {
  if (n_ != other.n_) throw std::invalid_argument("ground set size mismatch");
  GroundSubset s = *this;
  s.head_ |= other.head_;
  for (std::size_t w = 0; w < tail_.size(); ++w) s.tail_[w] |= other.tail_[w];
  return s;
}

bool GroundSubset::is_subset_of(const GroundSubset& other) const {
  if (n_ != other.n_) throw std::invalid_argument("ground set size mismatch");
  if ((head_ & ~other.head_) != 0) return false;
  for (std::size_t w = 0; w < tail_.size(); ++w) {
    if ((tail_[w] & ~other.tail_[w]) != 0) return false;
  }
  return true;
}

std::uint64_t GroundSubset::mask64() const {
  if (n_ > 64) throw std::logic_error("mask64 only valid for n <= 64");
  return head_;
}

std::vector<int> GroundSubset::members() const {
  std::vector<int> out;
  out.reserve(count());
  for (int i = 0; i < n_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

std::string GroundSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

bool GroundSubset::operator==(const GroundSubset& other) const {
  return n_ == other.n_ && head_ == other.head_ && tail_ == other.tail_;
}

bool GroundSubset::operator<(const GroundSubset& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  for (int w = words() - 1; w >= 0; --w) {
    if (word(w) != other.word(w)) return word(w) < other.word(w);
  }
  return false;
}

std::size_t GroundSubset::hash() const {
  // splitmix64-style mixing over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n_);
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
  };
  mix(head_);
  for (std::uint64_t w : tail_) mix(w);
  return static_cast<std::size_t>(h);
}

}  // namespace parsfm
