#pragma once

// Seeded deterministic randomness for the Monte Carlo oracles. The generator
// is pinned to the published splitmix64 algorithm (not std::mt19937 plus a
// distribution, whose output is implementation-defined) so that a (seed, n)
// pair reproduces bit-identical estimates on any platform.

#include <cmath>
#include <cstdint>
#include <numbers>

#include "resatom/linalg.hpp"

namespace resatom {

inline constexpr const char* RNG_ALGORITHM = "splitmix64";

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Area-uniform direction: cos(theta) uniform on [-1, 1], phi uniform on
// [0, 2*pi). Consumes exactly two draws, cos(theta) first.
inline Vec3 sample_unit_vector(SplitMix64& rng) {
  const double c = 2.0 * rng.next_unit() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.next_unit();
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  return {s * std::cos(phi), s * std::sin(phi), c};
}

}  // namespace resatom
