#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace lightsout {

inline constexpr const char* kGeneratorName = "mt19937_64/splitmix64-substreams";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// 64-bit Mersenne Twister with its own conversions, so a given seed yields the
// same stream with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for a tuple of indices, e.g. (seed, n, e, trial).
  static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> indices) {
    std::uint64_t h = splitmix64(seed);
    for (std::uint64_t k : indices) h = splitmix64(h ^ splitmix64(k + 0x632be59bd9b4e019ULL));
    return Rng(h);
  }

  std::uint64_t next() { return engine_(); }

  // Uniform on (0, 1].
  double uniform01() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

  // Uniform on {0, ..., bound-1}; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = next();
      if (x >= limit) return x % bound;
    }
  }

  // True with probability threshold / 2^64.
  bool bernoulli(std::uint64_t threshold) { return next() < threshold; }

 private:
  std::mt19937_64 engine_;
};

// Threshold for Rng::bernoulli; p is clamped to [0, 1].
inline std::uint64_t bernoulli_threshold(double p) {
  if (!(p > 0.0)) return 0;
  if (p >= 1.0) return ~std::uint64_t{0};
  const double scaled = p * 0x1.0p64;
  return scaled >= 0x1.0p64 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
}

}  // namespace lightsout
