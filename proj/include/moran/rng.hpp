#pragma once

#include <cstdint>

namespace moran {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic seeded generator (xoshiro256**). All randomized code in the
// library draws through this class, so results are reproducible from the seed
// alone, independent of platform or standard library.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : s_) {
      x = splitmix64(x);
      word = x == 0 ? 0x6a09e667f3bcc908ULL : x;
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on {0, ..., bound-1}; unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform on {lo, ..., hi}, inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform on {1, ..., n} \ {excl}.
  int uniform_excluding(int n, int excl) {
    int r = uniform_int(1, n - 1);
    return r >= excl ? r + 1 : r;
  }

  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

// Stream for replicate `index` of a run keyed by `master_seed`. Replicates
// get statistically independent streams and can be generated in any order,
// which keeps multi-threaded runs bit-identical to sequential ones.
inline RngStream derive_stream(std::uint64_t master_seed, std::uint64_t index) {
  return RngStream(splitmix64(master_seed ^ splitmix64(index + 0x51ed270b0a1c55d1ULL)));
}

}  // namespace moran
