#pragma once

#include <array>
#include <cstdint>

namespace fliptop {

// SplitMix64, used only to expand seeds into generator state.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// xoshiro256**; every Monte Carlo trial owns an independent stream derived
// from (seed, trial index), which keeps runs reproducible under any thread
// partitioning.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& w : s_) w = sm.next();
  }

  static Xoshiro256ss for_trial(std::uint64_t seed, std::uint64_t trial) {
    return Xoshiro256ss(seed ^ (0x9E3779B97F4A7C15ull * (trial + 1)));
  }

  std::uint64_t next() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0,1) with 53 random bits
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in {0..bound-1} via 128-bit multiply-shift
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::array<std::uint64_t, 4> s_;
};

}  // namespace fliptop
