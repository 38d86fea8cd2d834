#pragma once

#include <cstdint>

namespace pemark::detail {

/// splitmix64; used to derive independent seed streams and as the
/// project-wide deterministic generator. std::uniform_int_distribution is
/// implementation-defined, so bounded draws go through bounded() below to
/// keep outputs identical across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n). n must be positive.
  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

  /// Draw in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + bounded(hi - lo + 1);
  }

  double unit() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  Rng rng(seed ^ (0xA24BAED4963EE407ULL * (stream + 1)));
  return rng.next();
}

}  // namespace pemark::detail
