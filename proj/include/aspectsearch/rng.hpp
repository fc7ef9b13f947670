#pragma once

#include <cstdint>

namespace aspectsearch {

/// SplitMix64: tiny, fully specified, portable 64-bit generator
/// (Steele, Lea & Flood's mixing constants). Every Monte-Carlo draw in this
/// library routes through it, so results are reproducible bit-for-bit
/// across platforms for a fixed seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Stream-split rule for sharded simulation: shard s is seeded with the
/// (s+1)-th output of a SplitMix64 stream started at the run seed.
inline std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) {
  SplitMix64 stream(seed);
  std::uint64_t derived = stream.next();
  for (std::uint64_t s = 0; s < shard; ++s) derived = stream.next();
  return derived;
}

}  // namespace aspectsearch
