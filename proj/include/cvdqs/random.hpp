#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cvdqs {

// SplitMix64 step, used as the seed-splitting rule for parallel work units.
// derive_seed(master, k) is the (k+1)-th output of a SplitMix64 stream whose
// state starts at `master`; distinct k give statistically independent seeds
// and the mapping is fixed, so any work split reproduces the same streams.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i <= index; ++i) {
    out = splitmix64_next(state);
  }
  return out;
}

// Standard-normal stream over a seeded mt19937_64. Deviates come from the
// Box-Muller transform on uniforms built from the top 53 engine bits, so the
// sample stream for a given seed does not depend on the standard library's
// distribution internals.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    const double u1 = 1.0 - uniform01();  // (0, 1]: keeps the log finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return radius * std::cos(2.0 * kPi * u2);
  }

  // Uniform on [0, 1) from the top 53 engine bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  std::mt19937_64 engine_;
};

}  // namespace cvdqs
