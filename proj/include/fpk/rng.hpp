#pragma once

#include <cmath>
#include <cstdint>

namespace fpk {

// SplitMix64 stream with counter-based substream derivation.  Every draw is
// a pure function of (state sequence), so ensembles are reproducible
// bit-for-bit no matter how work is scheduled across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Substream i of a master seed: mix the golden-ratio increment by the
  // counter before finalizing, as in SplittableRandom::split.
  static Rng substream(std::uint64_t master, std::uint64_t counter) {
    return Rng(mix(master + (counter + 1) * 0x9E3779B97F4A7C15ULL));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform in (0, 1); never returns 0 or 1.
  double next_double() {
    const std::uint64_t u = next_u64() >> 11; // 53 bits
    return (static_cast<double>(u) + 0.5) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * next_double(); }

  double exponential() { return -std::log(next_double()); }

  // Standard normal via the Marsaglia polar method (one spare cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

} // namespace fpk
