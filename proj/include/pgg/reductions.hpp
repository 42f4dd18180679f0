#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pgg/core.hpp"
#include "pgg/gadgets.hpp"

namespace pgg {

struct Literal {
  int var = 0;  // zero-based variable index
  bool negated = false;
};

// Formula in ONE-IN-THREE form: satisfied when every clause has exactly one
// true literal slot. Variables may repeat within a clause.
struct OneInThreeFormula {
  int variable_count = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

// True iff exactly one slot per clause is true under `assignment`.
bool satisfies_one_in_three(const OneInThreeFormula& f,
                            const std::vector<std::uint8_t>& assignment);

// Where a node of a compiled instance came from.
struct NodeLabel {
  std::string gadget;  // "clause", "copy" or "negation"
  int instance = 0;    // per-kind counter
  std::string role;    // role name inside its gadget
};

struct ClauseBlock {
  int offset = 0;
  std::array<int, 3> literal_nodes{};
};

// A copy or negation gadget instance and the two literal nodes it joins.
struct GadgetLink {
  int offset = 0;
  int u_node = 0;
  int v_node = 0;
};

struct LabelMap {
  std::vector<NodeLabel> labels;
  std::vector<ClauseBlock> clause_blocks;
  std::vector<GadgetLink> copy_links;
  std::vector<GadgetLink> negation_links;
};

// Compile a formula into a game whose non-trivial equilibria correspond
// exactly to the formula's one-in-three assignments. Per clause one clause
// gadget; same-polarity occurrences of a variable are chained through copy
// gadgets; each variable appearing in both polarities gets one negation
// gadget joining the two chain ends. The result has maximum degree 6 and
// uses the 1,0,1 pattern.
std::pair<PggInstance, LabelMap> reduce_1in3_to_pgg(const OneInThreeFormula& f);

// Read a variable assignment off an equilibrium of the compiled instance.
// Throws std::invalid_argument unless `s` is a non-trivial equilibrium, and
// std::logic_error if the extracted assignment fails the formula (which a
// correct compilation rules out).
std::vector<std::uint8_t> extract_assignment(const PggInstance& inst,
                                             const OneInThreeFormula& f,
                                             const LabelMap& lm, const Profile& s);

// Build the equilibrium witnessing a satisfying assignment, filling gadget
// interiors from their witness tables. Throws std::invalid_argument if the
// assignment is not one-in-three, std::logic_error if the assembled profile
// fails verification.
Profile lift_assignment(const PggInstance& inst, const OneInThreeFormula& f,
                        const LabelMap& lm, const std::vector<std::uint8_t>& assignment);

// Two replicas of g, with each original edge also connecting the two sides,
// so a node's replica always sees replicas of the node's own neighbors.
Graph double_graph(const Graph& g);

// One graph per node j of g: g plus an add1 gadget on every node (bridge
// wired in) and one force1 gadget on node j. A game on g under a pattern
// shifted left by one has a non-trivial equilibrium iff some member of the
// family has one under the unshifted pattern.
std::vector<Graph> shift_family(const Graph& g, int m);

}  // namespace pgg
