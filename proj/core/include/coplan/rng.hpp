#pragma once

#include <cstdint>
#include <random>

namespace coplan {

// splitmix64 step; used to derive independent sub-seeds.
inline uint64_t MixSeed(uint64_t seed, uint64_t salt) {
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// mt19937_64 with hand-rolled samplers. std::uniform_*_distribution output is
// implementation-defined, which would break the bit-for-bit determinism
// contract of the instance generator; these samplers are fully specified.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform double in [lo, hi).
  double UniformReal(double lo, double hi) {
    const double unit = (NextU64() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
  }

  // Uniform integer in [lo, hi], inclusive, unbiased.
  int UniformInt(int lo, int hi) {
    const uint64_t range = static_cast<uint64_t>(hi) - lo + 1;
    const uint64_t threshold = (0 - range) % range;
    for (;;) {
      const uint64_t r = NextU64();
      if (r >= threshold) return lo + static_cast<int>(r % range);
    }
  }

  bool CoinFlip() { return (NextU64() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace coplan
