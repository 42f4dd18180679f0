#include <stdexcept>

#include "pgg/solve.hpp"

namespace pgg {

std::pair<PggInstance, Profile> build_path_pne(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one node");
  PggInstance inst{make_path(n), zero_or_two_pattern()};
  Profile s(static_cast<size_t>(n), 0);
  if (n % 3 == 0) {
    // Blocks of 0,1,0: each 1 has two silent neighbors, each 0 hears one 1.
    for (int i = 1; i < n; i += 3) s[static_cast<size_t>(i)] = 1;
  } else if (n % 3 == 1) {
    // 1,0,0,1 then blocks of 0,0,1: productive nodes sit two apart at the
    // seam and three apart afterwards.
    s[0] = 1;
    for (int i = 3; i < n; i += 3) s[static_cast<size_t>(i)] = 1;
  } else {
    // 0,1 then blocks of 0,0,1.
    for (int i = 1; i < n; i += 3) s[static_cast<size_t>(i)] = 1;
  }
  return {std::move(inst), std::move(s)};
}

std::pair<PggInstance, Profile> build_cycle_pne(int n) {
  PggInstance inst{make_cycle(n), zero_or_two_pattern()};
  // Everybody plays: each node hears exactly two productive neighbors.
  Profile s(static_cast<size_t>(n), 1);
  return {std::move(inst), std::move(s)};
}

Graph four_triangle_chain() {
  return Graph(9, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6},
                   {5, 6}, {6, 7}, {6, 8}, {7, 8}});
}

}  // namespace pgg
