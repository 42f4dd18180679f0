#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pgg/core.hpp"

namespace pgg {

// Exhaustive routines refuse graphs larger than this unless the caller
// raises the cap explicitly (2^26 leaf profiles is the practical ceiling).
inline constexpr int default_exhaustive_cap = 26;

// How a node participates in constrained enumeration:
//  - kConstrained: must play the pattern's best response to its neighbors.
//  - kFreeInput: ranges over 0/1 with no best-response check (boundary stub).
//  - kPortFreeOutside: best-response checked assuming an arbitrary number of
//    additional productive neighbors outside the graph may exist.
enum class NodeRole { kConstrained, kFreeInput, kPortFreeOutside };

struct SearchStats {
  std::int64_t visited = 0;  // leaf profiles reached
  std::int64_t pruned = 0;   // subtrees cut by consistency checks
};

// Enumerate every profile consistent with the given roles, in lexicographic
// order (node 0 most significant, 0 before 1). Entries of `pins` other than
// -1 force that node's value. `visit` returning false stops the walk early.
// Consistency for a kConstrained node means its value equals the pattern
// applied to its productive neighbor count; for kPortFreeOutside, value 1
// additionally allows any count k in [inside, inside + open slots] with
// pattern 1, and value 0 is always allowed (some outside count explains it).
void for_each_consistent(const Graph& g, const Pattern& t,
                         const std::vector<NodeRole>& roles,
                         const std::vector<std::int8_t>& pins,
                         const std::function<bool(const Profile&)>& visit,
                         SearchStats* stats = nullptr);

// All non-trivial pure equilibria of the instance, in lexicographic order,
// up to `limit` of them (limit 0 means no limit). Throws std::invalid_argument
// if the graph exceeds `cap` nodes.
std::vector<Profile> enumerate_ntpne(const PggInstance& inst, int limit = 0,
                                     int cap = default_exhaustive_cap,
                                     SearchStats* stats = nullptr);

enum class SolveMethod { kBrute, kCnf };
enum class SolveStatus { kFound, kNone };

struct SolveResult {
  SolveStatus status = SolveStatus::kNone;
  std::optional<Profile> witness;
  std::int64_t nodes_explored = 0;  // leaves (brute) or decisions (cnf)
  std::int64_t conflicts = 0;       // cnf only
  double elapsed_ms = 0.0;
};

// Propositional encoding of "this instance has a non-trivial equilibrium".
// Variable node_var[i] is node i's decision; auxiliary counter variables
// follow. Clauses use DIMACS-style signed literals.
struct CnfEncoding {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<int> node_var;
};

CnfEncoding encode_ntpne_cnf(const PggInstance& inst);

// Decide existence of a non-trivial equilibrium and produce one if present.
// The CNF route re-verifies its witness before returning.
SolveResult solve_ntpne(const PggInstance& inst, SolveMethod method,
                        int cap = default_exhaustive_cap);

// ---------------------------------------------------------------------------
// Best-response dynamics

enum class Schedule { kRoundRobin, kLowestDeviator };
enum class DynamicsTerminal { kFixpoint, kCycle, kCapReached };

struct DynamicsStep {
  int step = 0;
  int node = 0;              // node that flipped
  std::uint64_t profile_hash = 0;  // hash after the flip
};

struct DynamicsTrace {
  DynamicsTerminal terminal = DynamicsTerminal::kCapReached;
  Profile final_profile;
  std::vector<DynamicsStep> steps;
};

std::uint64_t profile_hash(const Profile& s);

// Iterate one-flip best-response updates from `start` until a fixpoint, a
// revisited profile, or `max_steps` flips. Round-robin resumes scanning
// after the last flipped node; lowest-deviator always flips the smallest
// disagreeing node id.
DynamicsTrace br_dynamics(const PggInstance& inst, const Profile& start,
                          Schedule schedule, int max_steps);

// ---------------------------------------------------------------------------
// Closed-form equilibrium families (pattern 1,0,1)

// Path on n nodes with a hand-built non-trivial equilibrium.
std::pair<PggInstance, Profile> build_path_pne(int n);

// Cycle on n nodes with the all-ones equilibrium.
std::pair<PggInstance, Profile> build_cycle_pne(int n);

// Nine-node chain of four triangles; has no pure equilibrium at all
// under pattern 1,0,1.
Graph four_triangle_chain();

}  // namespace pgg
