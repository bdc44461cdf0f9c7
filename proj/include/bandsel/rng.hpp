#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace bandsel {

// splitmix64: counter-based 64-bit generator (public-domain constants).
// Output i of stream `seed` is mix64(seed + (i+1)*kGolden), so any position
// can be generated independently.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_value(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + (counter + 1) * kGolden);
}

// Stream-split rule used for replicate seeds: two nested counter lookups,
// so (base, a, b) and (base, a', b') collide only if the hashes do.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return counter_value(counter_value(base, a), b);
}

// Uniform on the open interval (0,1), 52-bit resolution. Both the add and the
// scale are exact for k < 2^52, so the range is [2^-53, 1 - 2^-53] with no
// rounding onto the endpoints.
inline double uniform01(std::uint64_t bits) {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1p-52;
}

// Standard normals via Box-Muller on the counter stream: deterministic for a
// fixed seed, no rejection loop.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : seed_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01(counter_value(seed_, counter_++));
    const double u2 = uniform01(counter_value(seed_, counter_++));
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace bandsel
