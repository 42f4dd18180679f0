#pragma once

#include <cstdint>
#include <vector>

namespace pgg {

enum class SatResult { kSat, kUnsat };

struct SatStats {
  std::int64_t decisions = 0;
  std::int64_t conflicts = 0;
  std::int64_t propagations = 0;
};

// Conflict-driven SAT solver: two-watched-literal propagation, first-UIP
// clause learning, non-chronological backjumping. Branching is fixed
// (smallest unassigned variable, false first) and there are no restarts,
// so runs are fully deterministic for a given clause set.
class SatSolver {
 public:
  explicit SatSolver(int variable_count);

  // DIMACS-style literals: positive k means variable k, negative means its
  // negation. Tautologies are dropped, duplicate literals merged. All
  // clauses must be added before solve().
  void add_clause(const std::vector<int>& clause);

  SatResult solve();

  // Model value of a variable after solve() returned kSat.
  bool value(int var) const;

  const SatStats& stats() const { return stats_; }

 private:
  // Literal encoding: 2 * (var - 1) + (negated ? 1 : 0).
  static int var_of(int lit) { return lit >> 1; }  // zero-based
  enum Lbool : std::int8_t { kFalse = 0, kTrue = 1, kUndef = 2 };

  Lbool value_lit(int lit) const {
    Lbool v = assigns_[static_cast<size_t>(var_of(lit))];
    if (v == kUndef) return kUndef;
    return static_cast<Lbool>(v ^ (lit & 1));
  }

  void enqueue(int lit, int reason);
  int propagate();  // returns conflicting clause index, or -1
  void analyze(int confl, std::vector<int>& out_learnt, int& out_btlevel);
  void cancel_until(int level);
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  int nvars_;
  bool unsat_ = false;
  std::vector<std::vector<int>> clauses_;   // internal literal encoding
  std::vector<std::vector<int>> watches_;   // per literal: clause indices
  std::vector<Lbool> assigns_;              // per variable
  std::vector<int> level_;                  // per variable
  std::vector<int> reason_;                 // per variable, clause index or -1
  std::vector<int> trail_;                  // assigned literals in order
  std::vector<int> trail_lim_;              // trail size at each decision
  std::vector<std::uint8_t> seen_;          // scratch for analyze
  int qhead_ = 0;
  SatStats stats_;
};

}  // namespace pgg
