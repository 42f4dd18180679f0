#pragma once

// Reference implementations used as oracles. Deliberately the dumbest
// possible code: full truth-table scans with no pruning and no sharing with
// the library's search or encoding logic.

#include <cstdint>
#include <optional>
#include <vector>

#include "pgg/core.hpp"
#include "pgg/reductions.hpp"

namespace pgg::testing {

inline int slow_productive(const Graph& g, const Profile& s, int node) {
  int count = 0;
  for (int nb : g.neighbors(node)) count += s[static_cast<size_t>(nb)] != 0 ? 1 : 0;
  return count;
}

inline bool slow_is_pne(const Graph& g, const Pattern& t, const Profile& s) {
  for (int i = 0; i < g.node_count(); ++i)
    if (s[static_cast<size_t>(i)] != t.query(slow_productive(g, s, i))) return false;
  return true;
}

inline bool slow_is_ntpne(const Graph& g, const Pattern& t, const Profile& s) {
  if (!slow_is_pne(g, t, s)) return false;
  for (std::uint8_t v : s)
    if (v != 0) return true;
  return false;
}

// Profile with node 0 carrying the most significant bit, so increasing masks
// give lexicographically increasing profiles.
inline Profile mask_profile(int n, std::uint32_t mask) {
  Profile s(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    s[static_cast<size_t>(i)] =
        static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1u);
  return s;
}

// Every pure equilibrium (trivial one included), lexicographic order.
inline std::vector<Profile> slow_all_pne(const Graph& g, const Pattern& t) {
  std::vector<Profile> found;
  const int n = g.node_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Profile s = mask_profile(n, mask);
    if (slow_is_pne(g, t, s)) found.push_back(std::move(s));
  }
  return found;
}

inline std::vector<Profile> slow_all_ntpne(const Graph& g, const Pattern& t) {
  std::vector<Profile> found;
  for (Profile& s : slow_all_pne(g, t))
    if (std::find(s.begin(), s.end(), 1) != s.end()) found.push_back(std::move(s));
  return found;
}

inline bool slow_has_ntpne(const Graph& g, const Pattern& t) {
  const int n = g.node_count();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
    if (slow_is_pne(g, t, mask_profile(n, mask))) return true;
  return false;
}

// Truth-table satisfiability for one-in-three formulas; returns a witness.
inline std::optional<std::vector<std::uint8_t>> slow_one_in_three_witness(
    const OneInThreeFormula& f) {
  const int v = f.variable_count;
  for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
    std::vector<std::uint8_t> a(static_cast<size_t>(v), 0);
    for (int i = 0; i < v; ++i)
      a[static_cast<size_t>(i)] = static_cast<std::uint8_t>((mask >> i) & 1u);
    if (satisfies_one_in_three(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace pgg::testing
