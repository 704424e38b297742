#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace dpfrac {

// splitmix64: the project's only randomness source ("splitmix64-v1").
// Pure 64-bit integer arithmetic, so streams are identical on every platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform permutation of [0, n) via Fisher-Yates.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
      std::swap(p[i], p[j]);
    }
    return p;
  }
};

// Child seed for task `index` of a batch started with `seed`. Parallel batch
// runs draw from per-task streams, so results do not depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x632be59bd9b4e019ull + 0x9e3779b97f4a7c15ull * index));
  return g.next();
}

}  // namespace dpfrac
