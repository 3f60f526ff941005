#pragma once

#include <cmath>
#include <cstdint>

namespace nsclab {

// Purpose tags keep substreams drawn for different roles disjoint even when
// they share a seed and index.
namespace rng_tag {
inline constexpr std::uint64_t kMatrixEntry = 1;
inline constexpr std::uint64_t kSupport = 2;
inline constexpr std::uint64_t kValues = 3;
inline constexpr std::uint64_t kRestart = 4;
inline constexpr std::uint64_t kTrial = 5;
inline constexpr std::uint64_t kPerturb = 6;
}  // namespace rng_tag

/// Counter-based splittable random stream. A stream is a pure function of
/// (seed, tag, index), so parallel workers can derive disjoint substreams
/// and reproduce them regardless of scheduling.
class SplitStream {
 public:
  explicit SplitStream(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static SplitStream derive(std::uint64_t seed, std::uint64_t tag,
                            std::uint64_t index) {
    std::uint64_t h = mix(seed + 0x9e3779b97f4a7c15ULL);
    h = mix(h ^ (tag * 0xd1342543de82ef95ULL));
    h = mix(h ^ (index * 0x2545f4914f6cdd1dULL));
    return SplitStream(h);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [0, 1), exact from the top 53 bits.
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  /// Standard normal via the polar method.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = next_symmetric();
      v = next_symmetric();
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace nsclab
