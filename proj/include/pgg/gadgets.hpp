#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgg/core.hpp"
#include "pgg/solve.hpp"

namespace pgg {

// One boundary-to-inside completion that has been checked, at construction
// time, to leave every gadget node playing best response. `boundary` assigns
// the gadget's external interface (stub names, or port names for a gadget
// with no stubs); `assignment` covers the gadget's own nodes.
struct WitnessEntry {
  std::map<std::string, int> boundary;
  Profile assignment;
};

// A reusable building block: a graph fragment with named ports through which
// it attaches to the rest of a construction. `boundary` declares one stub
// node per external attachment as a (stub name, port name) pair; stubs are
// not part of `graph` and stand for whatever outside node gets wired in.
struct PortedSubgraph {
  std::string kind;
  Graph graph;
  std::map<std::string, int> ports;
  std::vector<std::pair<std::string, std::string>> boundary;
  std::vector<std::string> node_roles;  // per node, unique within the gadget
  std::vector<WitnessEntry> witness_table;
  Pattern witness_pattern;

  // Entry whose boundary map equals `boundary`, or nullptr.
  const WitnessEntry* find_witness(const std::map<std::string, int>& boundary) const;
};

// Builders. Each validates its witness table before returning and throws
// std::logic_error if any entry fails, so a constructed gadget is known good.
PortedSubgraph make_clause_gadget();
PortedSubgraph make_negation_gadget();
PortedSubgraph make_copy_gadget();
PortedSubgraph make_force1_gadget(int m);
PortedSubgraph make_add1_gadget(int m);

// Lookup by kind name as used on the command line; force1/add1 take `m`.
PortedSubgraph make_gadget(const std::string& kind, int m);

// ---------------------------------------------------------------------------
// Behavioral contracts, checked by exhaustive sweep.

enum class RequirementKind {
  kForallPne,      // predicate holds in every consistent configuration
  kExistsWitness,  // some consistent configuration matches the pins
};

// How the gadget's boundary is treated during a sweep:
//  - kIsolated: the gadget stands alone; ports best-respond to inside only.
//  - kStubs: declared stubs are added as free 0/1 inputs wired to their
//    ports; every gadget node best-responds in the extended graph.
//  - kFreeOutside: no stubs; ports may have any number of productive
//    outside neighbors, so their check is existential over outside counts.
enum class BoundaryMode { kIsolated, kStubs, kFreeOutside };

// Named node values of one configuration under inspection. Names cover the
// gadget's roles and ports, plus stub names in kStubs mode.
struct ContractContext {
  const std::map<std::string, int>* names = nullptr;
  const Profile* profile = nullptr;
  int value(const std::string& name) const;
};

struct Requirement {
  std::string name;
  RequirementKind kind = RequirementKind::kForallPne;
  BoundaryMode mode = BoundaryMode::kStubs;
  std::map<std::string, int> pins;  // name -> forced value
  std::function<bool(const ContractContext&)> predicate;  // may be empty for exists
};

using GadgetContract = std::vector<Requirement>;

GadgetContract clause_gadget_contract();
GadgetContract negation_gadget_contract();
GadgetContract copy_gadget_contract();
GadgetContract force1_gadget_contract();
GadgetContract add1_gadget_contract();
GadgetContract contract_for(const std::string& kind);

struct RequirementResult {
  std::string name;
  bool passed = false;
  std::int64_t configs = 0;  // consistent configurations examined
  std::optional<Profile> counterexample;  // over the extended graph
  std::optional<Profile> witness;         // over the extended graph
};

struct ContractReport {
  bool all_passed = false;
  std::vector<RequirementResult> results;
};

// Sweep every configuration relevant to each requirement and record the
// outcome. Throws std::invalid_argument if the extended graph exceeds `cap`
// nodes.
ContractReport verify_gadget_contract(const PortedSubgraph& g, const Pattern& t,
                                      const GadgetContract& contract,
                                      int cap = default_exhaustive_cap);

}  // namespace pgg
