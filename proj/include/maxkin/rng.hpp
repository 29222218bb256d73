#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace maxkin {

/// Identifies one reproducible random stream. The same (seed, stream_id)
/// pair regenerates the same sequence on every run.
struct SeedSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

namespace detail {
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace detail

/// xoshiro256++ (Blackman & Vigna, public domain), the project's pinned
/// generator. State is expanded from (seed XOR stream_id * golden gamma)
/// with SplitMix64, so every (seed, stream_id) pair names an independent
/// stream. Pure 64-bit integer arithmetic: the output sequence is identical
/// on every conforming platform. The exact construction is frozen by
/// regression tests; changing it is a breaking change to every stored batch.
class Xoshiro256PlusPlus {
 public:
  explicit Xoshiro256PlusPlus(const SeedSpec& spec) {
    std::uint64_t sm = spec.seed ^ (spec.stream_id * 0x9e3779b97f4a7c15ull);
    for (auto& word : state_) {
      word = detail::splitmix64_next(sm);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
      state_[0] = 0x9e3779b97f4a7c15ull;  // all-zero state is invalid
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result =
        detail::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::array<std::uint64_t, 4> state_;
};

/// Standard normal deviates via the Marsaglia polar method. Each rejection
/// round consumes exactly two uniforms; accepted rounds yield two normals,
/// the second cached for the next call. This consumption pattern is part of
/// the reproducibility contract.
class NormalSource {
 public:
  explicit NormalSource(const SeedSpec& spec) : rng_(spec) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u;
    double v;
    double s;
    do {
      u = 2.0 * rng_.next_unit() - 1.0;
      v = 2.0 * rng_.next_unit() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
  }

 private:
  Xoshiro256PlusPlus rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace maxkin
