#ifndef GACT_RNG_HPP
#define GACT_RNG_HPP

#include <cstdint>
#include <random>

namespace gact {

// Seeded generator with hand-rolled range reduction. std::mt19937_64 output is
// specified by the standard, but the <random> distributions are not, so ledgers
// built through this struct are byte-stable across platforms.
struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::uint64_t next() { return engine(); }

  // uniform-ish value in [0, n); bias is irrelevant at the sizes used here
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  // integer in [lo, hi]
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool flip() { return (next() & 1u) != 0; }

  std::mt19937_64 engine;
};

}  // namespace gact

#endif
