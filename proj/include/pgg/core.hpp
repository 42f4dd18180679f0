#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgg/graph.hpp"
#include "pgg/pattern.hpp"

namespace pgg {

// A strategy profile: one 0/1 decision per node, indexed by node id.
using Profile = std::vector<std::uint8_t>;

// A public goods game: who is connected to whom, plus the best-response
// pattern that every node follows.
struct PggInstance {
  Graph graph;
  Pattern pattern;
};

// Number of neighbors of `node` that play 1 under `s`.
int productive_neighbors(const Graph& g, const Profile& s, int node);

// True iff every node plays the pattern's best response to its neighbor count.
bool is_pne(const PggInstance& inst, const Profile& s);

// True iff `s` is a pure equilibrium and at least one node plays 1.
bool is_ntpne(const PggInstance& inst, const Profile& s);

// Smallest node id whose play disagrees with its best response, if any.
std::optional<int> find_deviator(const PggInstance& inst, const Profile& s);

// Parse a profile from a string of '0'/'1' characters, e.g. "0110".
Profile parse_profile(const std::string& text);

// Render a profile as a string of '0'/'1' characters.
std::string format_profile(const Profile& s);

}  // namespace pgg
