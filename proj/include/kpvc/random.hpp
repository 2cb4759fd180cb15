#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "kpvc/graph.hpp"

namespace kpvc {

struct RandomSeed {
  std::uint64_t value = 0;
};

// Portable stream built on MT19937-64, whose output sequence is fixed by the
// C++ standard. Range reduction and shuffling are done here instead of via
// <random> distributions, whose algorithms are implementation defined.
class Rng {
 public:
  explicit Rng(RandomSeed seed) : engine_(seed.value) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound) by rejection sampling.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Fisher-Yates: for i = n-1 down to 1 swap position i with below(i + 1).
inline std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace kpvc
