#pragma once

#include <cstdint>

#include "pgg/graph.hpp"
#include "pgg/pattern.hpp"

namespace pgg {

// Deterministic 64-bit generator (splitmix64). Self-contained so seeded
// test corpora stay byte-identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // True with probability numer/denom.
  bool chance(std::uint64_t numer, std::uint64_t denom) { return below(denom) < numer; }

 private:
  std::uint64_t state_;
};

// Erdos-Renyi style graph: each pair becomes an edge with probability
// percent/100, drawn from `rng` in (u, v) lexicographic order.
Graph random_graph(SplitMix64& rng, int node_count, int percent);

// Random canonical pattern with at most `max_entries` stored entries.
// Never returns the all-zero pattern.
Pattern random_pattern(SplitMix64& rng, int max_entries);

}  // namespace pgg
