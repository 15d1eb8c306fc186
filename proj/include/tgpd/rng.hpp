#pragma once

// Deterministic 64-bit generator used for every seeded corpus.
//
// Seeding: the user seed is passed once through splitmix64
//   z += 0x9E3779B97F4A7C15
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^= z >> 31
// (a zero result is replaced by 0x9E3779B97F4A7C15).
// Stream: xorshift64* with shifts (12, 25, 27) and output multiplier
// 0x2545F4914F6CDD1D.
// Bounded draws use the high 32 bits times the bound, shifted down 32.

#include <cstddef>
#include <cstdint>

namespace tgpd {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed)) {
    if (state_ == 0) {
      state_ = 0x9E3779B97F4A7C15ULL;
    }
  }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform-ish value in [0, bound); bound must be in [1, 2^32].
  std::size_t below(std::size_t bound) {
    return static_cast<std::size_t>(((next() >> 32) * bound) >> 32);
  }

  /// True with probability num/den.
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

private:
  std::uint64_t state_;
};

} // namespace tgpd
