#pragma once

#include <cstdint>
#include <initializer_list>

namespace rainbow {

// Deterministic 64-bit generator (splitmix64).  We deliberately avoid the
// standard <random> distributions: their output is implementation-defined,
// and experiment reports must be byte-identical across platforms and reruns.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) via rejection; bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Derives a stream seed from a root seed and a path of indices, so that each
// (graph, coloring, ...) coordinate gets an independent deterministic stream.
// Each path element is folded in through the splitmix finalizer.
inline std::uint64_t derive_seed(std::uint64_t root,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = root;
  for (std::uint64_t p : path) {
    h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    SplitMix64 mix(h);
    h = mix.next();
  }
  return h;
}

}  // namespace rainbow
