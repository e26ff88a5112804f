#pragma once

#include <cmath>
#include <cstdint>

namespace mcb {

// splitmix64 finalizer (Vigna). Bijective on 64-bit words.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream seed for replicate `index` under `master`. Injective in `index`
// for fixed master: the inner map is affine with an odd multiplier and the
// splitmix finalizer is a bijection. Replicates therefore get distinct,
// decorrelated streams regardless of scheduling.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master,
                                           std::uint64_t index) noexcept {
  return splitmix64_mix(master ^ splitmix64_mix(index * 0x9e3779b97f4a7c15ULL +
                                                0x2545f4914f6cdd1dULL));
}

// xoshiro256++ (Blackman/Vigna), seeded through splitmix64. Hand-rolled so
// that every draw is bit-reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& w : s_) {
      sm += 0x9e3779b97f4a7c15ULL;
      w = splitmix64_mix(sm);
    }
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0,1), 53 random bits.
  double uniform() noexcept { return double(next() >> 11) * 0x1.0p-53; }

  // Uniform double in (0,1].
  double uniform_pos() noexcept { return double((next() >> 11) + 1) * 0x1.0p-53; }

  // Exponential waiting time with the given rate; strictly positive.
  double exponential(double rate) noexcept {
    return -std::log(uniform_pos()) / rate;
  }

  // Standard normal via the Marsaglia polar method; the spare deviate is
  // cached, so draws come in deterministic pairs.
  double normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // Uniform integer in {0, ..., n-1}, unbiased (Lemire with rejection).
  std::uint64_t below(std::uint64_t n) noexcept {
    __uint128_t m = __uint128_t(next()) * n;
    auto lo = std::uint64_t(m);
    if (lo < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        m = __uint128_t(next()) * n;
        lo = std::uint64_t(m);
      }
    }
    return std::uint64_t(m >> 64);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mcb
