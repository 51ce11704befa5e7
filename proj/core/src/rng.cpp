#include "parsfm/rng.hpp"

namespace parsfm {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream),
      gen_(splitmix64(splitmix64(seed) ^ splitmix64(stream ^ 0xda3e39cb94b95bdbull))) {}

double Rng::uniform() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(gen_);
}

double Rng::normal() {
  return std::normal_distribution<double>(0.0, 1.0)(gen_);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
}

Rng Rng::split(std::uint64_t index) const {
  return Rng(seed_, splitmix64(stream_ * 0x2545f4914f6cdd1dull + index + 1));
}

}  // namespace parsfm
