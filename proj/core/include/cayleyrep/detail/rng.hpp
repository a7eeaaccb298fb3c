#ifndef CAYLEYREP_DETAIL_RNG_HPP
#define CAYLEYREP_DETAIL_RNG_HPP

#include <cmath>
#include <cstdint>

namespace cayley::detail {

/// splitmix64: tiny, portable, documented generator so that seeded runs are
/// byte-identical across platforms (standard-library distributions are not).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Standard normal via Box-Muller on the portable unit() stream.
  double gaussian() {
    double u1 = unit();
    while (u1 <= 0.0) u1 = unit();
    double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
};

}  // namespace cayley::detail

#endif
