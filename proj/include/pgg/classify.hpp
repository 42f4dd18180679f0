#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgg/pattern.hpp"

namespace pgg {

// Complexity of "does a non-trivial pure equilibrium exist" over all graphs,
// for a fixed finite pattern.
enum class Verdict {
  kAlwaysFalse,         // no graph has one (the all-zero pattern)
  kAlwaysTrue,          // every nonempty graph has one
  kPolyKnown,           // decidable in polynomial time but not constant
  kNpComplete,          // NP-complete, certified by a reduction chain
  kOutOfScopeInfinite,  // reserved for patterns with infinitely many ones
};

// For finite patterns the middle ground is empty: everything that is not
// constant-answer is NP-complete, so kPolyKnown and kOutOfScopeInfinite are
// never produced here. They stay in the enum so downstream code that stores
// verdicts has the full vocabulary.

enum class StepKind { kHalve, kShift, kPrepend10, kBase };

// Terminal rules a chain may bottom out in. The first three are backed by
// constructions this project can actually build and sweep; the remaining
// three restate results established in prior published work.
namespace rules {
inline constexpr char kZeroOrTwoCore[] = "ZERO_OR_TWO_CORE";
inline constexpr char kAlternatingPrefix[] = "ALTERNATING_PREFIX";
inline constexpr char kIsolatedOddOne[] = "ISOLATED_ODD_ONE";
inline constexpr char kStartsWithZero[] = "STARTS_WITH_ZERO";
inline constexpr char kStartsWithOneOne[] = "STARTS_WITH_ONE_ONE";
inline constexpr char kAlternatingWithOddOne[] = "ALTERNATING_WITH_ODD_ONE";
}  // namespace rules

// "constructive" or "prior_literature".
std::string base_rule_source(const std::string& rule);

// One link in a hardness argument. `pattern` is the pattern the step starts
// from; the last step certifies its pattern directly by a base rule.
//  - kHalve: pattern is a double of the next step's pattern.
//  - kShift: next pattern equals this one shifted left by `amount` (even).
//  - kPrepend10: this pattern, prefixed by `amount` copies of 1,0, equals
//    the previous step's pattern. Always paired right after its kShift.
//  - kBase: `rule` applies to `pattern` with parameter `amount`.
struct ReductionStep {
  StepKind kind = StepKind::kBase;
  Pattern pattern;
  int amount = 0;
  std::string rule;
};

struct ReductionChain {
  std::vector<ReductionStep> steps;
};

struct HardnessVerdict {
  Verdict verdict = Verdict::kAlwaysFalse;
  std::optional<ReductionChain> chain;  // present iff kNpComplete
};

// Decide the verdict for `t` and, in the NP-complete case, assemble a chain
// and re-validate it before returning (std::logic_error on internal failure).
HardnessVerdict classify(const Pattern& t);

struct ChainReport {
  bool ok = false;
  std::vector<std::string> issues;
  std::vector<bool> per_step_ok;
};

// Re-check a chain against the pattern it claims to classify: every step's
// arithmetic, the shift/prepend pairing, and the final base hypothesis.
ChainReport validate_chain(const Pattern& t, const ReductionChain& chain);

// Does `rule` with parameter `amount` genuinely apply to `t`?
bool hypothesis_check(const std::string& rule, const Pattern& t, int amount);

std::string verdict_name(Verdict v);
std::string step_kind_name(StepKind k);

}  // namespace pgg
