#pragma once

#include <cstdint>

namespace sbmtest {

// SplitMix64: counter-based 64-bit generator (golden-ratio increment,
// Stafford mix13 finalizer). The stream is fully determined by the seed,
// which keeps chain output bit-identical across runs and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform double in [0, 1), 53 mantissa bits
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n); modulo bias is < n / 2^64
  std::uint64_t uniform_below(std::uint64_t n) { return next() % n; }

  // seed for sub-stream `index` of a base seed (used for multi-chain runs)
  static std::uint64_t derive(std::uint64_t base, std::uint64_t index) {
    SplitMix64 g(base);
    std::uint64_t s = 0;
    for (std::uint64_t i = 0; i <= index; ++i) s = g.next();
    return s;
  }

 private:
  std::uint64_t state_;
};

}  // namespace sbmtest
