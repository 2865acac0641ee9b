#ifndef BERGEHAM_GENERATORS_HPP
#define BERGEHAM_GENERATORS_HPP

#include <cstdint>
#include <optional>

#include "bergeham/hypergraph.hpp"

namespace bergeham {

/// splitmix64: the fixed random source for every seeded generator, so
/// campaigns reproduce bit-for-bit across platforms.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// uniform in [0, 1)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// uniform in [0, bound), bound >= 1, unbiased by rejection
  uint64_t below(uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }
};

/// splitmix64 finalizer, used to derive independent per-sample seeds.
uint64_t mix64(uint64_t x);

/// Per-sample seed for sample `index` of a campaign seeded with `seed`.
uint64_t sample_seed(uint64_t seed, uint64_t index);

/// Complete r-graph on vertices 0..n-2 plus vertex n-1 in the single extra
/// edge {n-1, 0, .., r-2}. Requires 3 <= r < n.
Hypergraph gen_hprime(int n, int r);

/// k parts of part_size vertices; one edge per unordered part pair.
/// Requires k >= 2, part_size >= 1 and C(k,2) < k*part_size.
Hypergraph gen_blowup(int k, int part_size);

/// The 5-vertex, 4-edge covering hypergraph with no Hamiltonian Berge cycle.
Hypergraph gen_luwang();

/// Each 2-subset independently with probability p2, each 3-subset with p3;
/// seed-deterministic.
Hypergraph gen_random(int n, double p2, double p3, uint64_t seed);

/// Covering variant: random 3-subsets, then 3-edges added over non-adjacent
/// pairs until the shadow is complete.
Hypergraph gen_random_covering(int n, uint64_t seed);

/// Samples and densifies (random 3-edges over the currently minimizing
/// non-adjacent pair) until the Ore(d0) condition is certified. nullopt after
/// max_attempts failed rounds.
std::optional<Hypergraph> gen_random_ore(int n, int d0, uint64_t seed, int max_attempts = 16);

}  // namespace bergeham

#endif
