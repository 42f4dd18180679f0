#include "pgg/util.hpp"

#include <stdexcept>

namespace pgg {

Graph random_graph(SplitMix64& rng, int node_count, int percent) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < node_count; ++u)
    for (int v = u + 1; v < node_count; ++v)
      if (rng.chance(static_cast<std::uint64_t>(percent), 100)) edges.emplace_back(u, v);
  return Graph(node_count, edges);
}

Pattern random_pattern(SplitMix64& rng, int max_entries) {
  if (max_entries < 1) throw std::invalid_argument("pattern needs at least one entry");
  for (;;) {
    std::vector<std::uint8_t> bits(static_cast<size_t>(rng.below(static_cast<std::uint64_t>(max_entries)) + 1));
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.below(2));
    Pattern t(bits);
    if (!t.all_zero()) return t;
  }
}

}  // namespace pgg
