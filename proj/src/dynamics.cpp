#include <stdexcept>
#include <string>
#include <unordered_set>

#include "pgg/solve.hpp"

namespace pgg {

namespace {

std::string pack_profile(const Profile& s) {
  std::string bytes((s.size() + 7) / 8, '\0');
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i]) bytes[i / 8] = static_cast<char>(bytes[i / 8] | (1 << (i % 8)));
  return bytes;
}

}  // namespace

std::uint64_t profile_hash(const Profile& s) {
  // FNV-1a, 64-bit.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : s) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

DynamicsTrace br_dynamics(const PggInstance& inst, const Profile& start,
                          Schedule schedule, int max_steps) {
  const int n = inst.graph.node_count();
  if (static_cast<int>(start.size()) != n)
    throw std::invalid_argument("profile length does not match node count");
  DynamicsTrace trace;
  Profile s = start;
  std::unordered_set<std::string> visited;
  visited.insert(pack_profile(s));
  int cursor = 0;  // round-robin scan position
  int steps_done = 0;
  for (;;) {
    int deviator = -1;
    if (schedule == Schedule::kLowestDeviator) {
      if (auto d = find_deviator(inst, s)) deviator = *d;
    } else {
      for (int off = 0; off < n; ++off) {
        const int i = (cursor + off) % n;
        const int k = productive_neighbors(inst.graph, s, i);
        if (s[static_cast<size_t>(i)] != inst.pattern.query(k)) {
          deviator = i;
          break;
        }
      }
    }
    if (deviator == -1) {
      trace.terminal = DynamicsTerminal::kFixpoint;
      break;
    }
    if (steps_done == max_steps) {
      trace.terminal = DynamicsTerminal::kCapReached;
      break;
    }
    s[static_cast<size_t>(deviator)] ^= 1;
    cursor = (deviator + 1) % n;
    ++steps_done;
    trace.steps.push_back({steps_done, deviator, profile_hash(s)});
    if (!visited.insert(pack_profile(s)).second) {
      trace.terminal = DynamicsTerminal::kCycle;
      break;
    }
  }
  trace.final_profile = std::move(s);
  return trace;
}

}  // namespace pgg
