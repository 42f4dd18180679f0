#include "pgg/core.hpp"

#include <stdexcept>

namespace pgg {

int productive_neighbors(const Graph& g, const Profile& s, int node) {
  int count = 0;
  for (int v : g.neighbors(node)) count += s[static_cast<size_t>(v)];
  return count;
}

std::optional<int> find_deviator(const PggInstance& inst, const Profile& s) {
  const int n = inst.graph.node_count();
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("profile length does not match node count");
  for (int i = 0; i < n; ++i) {
    const int k = productive_neighbors(inst.graph, s, i);
    if (s[static_cast<size_t>(i)] != inst.pattern.query(k)) return i;
  }
  return std::nullopt;
}

bool is_pne(const PggInstance& inst, const Profile& s) {
  return !find_deviator(inst, s).has_value();
}

bool is_ntpne(const PggInstance& inst, const Profile& s) {
  if (!is_pne(inst, s)) return false;
  for (std::uint8_t b : s)
    if (b) return true;
  return false;
}

Profile parse_profile(const std::string& text) {
  Profile s;
  s.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("profile must be 0/1 characters");
    s.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return s;
}

std::string format_profile(const Profile& s) {
  std::string out;
  out.reserve(s.size());
  for (std::uint8_t b : s) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace pgg
