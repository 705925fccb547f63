#pragma once

#include <cstdint>

namespace stppr {

// SplitMix64 bit mixer (Vigna). Core primitive for both the sequential
// generator below and for deriving independent streams from logical ids.
inline std::uint64_t mix_bits(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t x) {
  return mix_bits(x + 0x9e3779b97f4a7c15ULL);
}

// Counter-based stream derivation: the result depends only on (seed, a, b),
// never on draw order, so parallel or reordered execution reproduces the
// exact same randomness.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t h = mix64(seed + 0x632be59bd9b4e019ULL * (a + 1));
  return mix64(h + 0x9e3779b97f4a7c15ULL * (b + 1));
}

// One uniform double in (0,1] keyed by logical position. Open at zero so it
// is always safe to divide by the result.
inline double unit_open_at(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return double((derive_seed(seed, a, b) >> 11) + 1) * 0x1.0p-53;
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return mix_bits(state_ += 0x9e3779b97f4a7c15ULL); }

  // [0,1)
  double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

  // (0,1]
  double next_unit_open() { return double((next() >> 11) + 1) * 0x1.0p-53; }

  // uniform in [0, bound), bound > 0
  std::uint32_t next_below(std::uint32_t bound) {
    return std::uint32_t(((unsigned __int128)next() * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace stppr
