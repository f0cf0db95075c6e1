#pragma once

#include <cstdint>

namespace msd {

// Splitmix64: small, fast, and identical across platforms, so seeded runs
// are byte-reproducible everywhere.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }
};

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  Rng r(a ^ (b * 0x2545f4914f6cdd1dull + 0x9e3779b97f4a7c15ull));
  return r.next();
}

}  // namespace msd
