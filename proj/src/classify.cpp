#include "pgg/classify.hpp"

#include <stdexcept>

namespace pgg {

namespace {

// Largest m such that the pattern alternates 1,0 through index 2m+1.
int alternation_reach(const Pattern& t) {
  int m = -1;
  while (t.query(2 * (m + 1)) == 1 && t.query(2 * (m + 1) + 1) == 0) ++m;
  return m;
}

// Largest even index E such that every even index up to E holds 1.
int even_ones_reach(const Pattern& t) {
  int e = 0;
  while (t.query(e + 2) == 1) e += 2;
  return t.query(0) == 1 ? e : -2;
}

// Smallest m >= 1 with 0,1,0 at indices 2m..2m+2, or -1.
int smallest_isolated_odd(const Pattern& t) {
  for (int m = 1; 2 * m + 1 <= t.stored_length(); ++m)
    if (t.query(2 * m) == 0 && t.query(2 * m + 1) == 1 && t.query(2 * m + 2) == 0)
      return m;
  return -1;
}

bool has_odd_one_in(const Pattern& t, int lo, int hi) {
  for (int j = lo | 1; j <= hi; j += 2)
    if (t.query(j) == 1) return true;
  return false;
}

bool any_odd_one_above(const Pattern& t, int lo) {
  return has_odd_one_in(t, lo, t.stored_length());
}

// Chain for a pattern with t[0]=1, t[1]=0 and at least one later 1: halve
// until a known-hard shape appears, recording every move.
void extend_semi_sharp_chain(Pattern current, std::vector<ReductionStep>& steps) {
  for (;;) {
    const Pattern h = current.half();
    if (h.query(1) == 1) {
      if (!classify_shape(h).monotone_decreasing) {
        steps.push_back({StepKind::kHalve, current, 0, {}});
        steps.push_back({StepKind::kBase, h, 0, rules::kStartsWithOneOne});
        return;
      }
      const int l = h.max_one_index();
      if (has_odd_one_in(current, 3, 2 * l + 1)) {
        steps.push_back({StepKind::kBase, current, 2 * l, rules::kAlternatingWithOddOne});
        return;
      }
      if (any_odd_one_above(current, 2 * l + 3)) {
        const Pattern rest = current.shifted_left(2 * l);
        steps.push_back({StepKind::kShift, current, 2 * l, {}});
        steps.push_back({StepKind::kPrepend10, rest, l, {}});
        steps.push_back({StepKind::kBase, rest, smallest_isolated_odd(rest),
                         rules::kIsolatedOddOne});
        return;
      }
      steps.push_back({StepKind::kBase, current, l, rules::kAlternatingPrefix});
      return;
    }
    if (h == best_shot_pattern()) {
      // All even entries past 0 vanish, so the surviving odd 1 is isolated.
      steps.push_back({StepKind::kBase, current, smallest_isolated_odd(current),
                       rules::kIsolatedOddOne});
      return;
    }
    steps.push_back({StepKind::kHalve, current, 0, {}});
    current = h;
  }
}

ReductionChain build_np_chain(const Pattern& t) {
  ReductionChain chain;
  if (t.query(0) == 0) {
    chain.steps.push_back({StepKind::kBase, t, 0, rules::kStartsWithZero});
    return chain;
  }
  if (t.query(1) == 1) {
    chain.steps.push_back({StepKind::kBase, t, 0, rules::kStartsWithOneOne});
    return chain;
  }
  if (t.query(2) == 0) {
    extend_semi_sharp_chain(t, chain.steps);
    return chain;
  }
  // Spiked: try the alternating shapes before falling back to shifting off
  // the leading 1,0 blocks.
  if (hypothesis_check(rules::kZeroOrTwoCore, t, 0)) {
    chain.steps.push_back({StepKind::kBase, t, 0, rules::kZeroOrTwoCore});
    return chain;
  }
  const int m_alt = alternation_reach(t);
  if (hypothesis_check(rules::kAlternatingPrefix, t, m_alt)) {
    chain.steps.push_back({StepKind::kBase, t, m_alt, rules::kAlternatingPrefix});
    return chain;
  }
  const int e = even_ones_reach(t);
  if (has_odd_one_in(t, 3, e + 1)) {
    chain.steps.push_back({StepKind::kBase, t, e, rules::kAlternatingWithOddOne});
    return chain;
  }
  // Now the entries strictly alternate up to the first even 0 at index 2k,
  // and a later 1 exists, so shifting by 2k-2 leaves a harder core.
  const int k = e / 2 + 1;
  const Pattern rest = t.shifted_left(2 * k - 2);
  chain.steps.push_back({StepKind::kShift, t, 2 * k - 2, {}});
  chain.steps.push_back({StepKind::kPrepend10, rest, k - 1, {}});
  extend_semi_sharp_chain(rest, chain.steps);
  return chain;
}

}  // namespace

std::string base_rule_source(const std::string& rule) {
  if (rule == rules::kZeroOrTwoCore || rule == rules::kAlternatingPrefix ||
      rule == rules::kIsolatedOddOne)
    return "constructive";
  if (rule == rules::kStartsWithZero || rule == rules::kStartsWithOneOne ||
      rule == rules::kAlternatingWithOddOne)
    return "prior_literature";
  throw std::invalid_argument("unknown base rule: " + rule);
}

bool hypothesis_check(const std::string& rule, const Pattern& t, int amount) {
  if (rule == rules::kStartsWithZero) return t.query(0) == 0 && !t.all_zero();
  if (rule == rules::kStartsWithOneOne)
    return t.query(0) == 1 && t.query(1) == 1 && !classify_shape(t).monotone_decreasing;
  if (rule == rules::kZeroOrTwoCore)
    return t.query(0) == 1 && t.query(1) == 0 && t.query(2) == 1 && t.query(3) == 0 &&
           t.query(4) == 0 && t.query(5) == 0 && t.query(6) == 0;
  if (rule == rules::kAlternatingPrefix) {
    if (amount < 1) return false;
    for (int k = 0; k <= amount; ++k)
      if (t.query(2 * k) != 1 || t.query(2 * k + 1) != 0) return false;
    return t.query(2 * amount + 2) == 0 && t.query(2 * amount + 3) == 0 &&
           t.query(2 * amount + 4) == 0;
  }
  if (rule == rules::kAlternatingWithOddOne) {
    if (amount < 2 || t.query(1) != 0) return false;
    for (int k = 0; 2 * k <= amount; ++k)
      if (t.query(2 * k) != 1) return false;
    for (int n = 1; 2 * n + 1 <= amount + 1; ++n)
      if (t.query(2 * n + 1) == 1) return true;
    return false;
  }
  if (rule == rules::kIsolatedOddOne) {
    return amount >= 1 && t.query(0) == 1 && t.query(1) == 0 && t.query(2) == 0 &&
           t.query(2 * amount) == 0 && t.query(2 * amount + 1) == 1 &&
           t.query(2 * amount + 2) == 0;
  }
  throw std::invalid_argument("unknown base rule: " + rule);
}

HardnessVerdict classify(const Pattern& t) {
  HardnessVerdict out;
  if (t.all_zero()) {
    out.verdict = Verdict::kAlwaysFalse;
    return out;
  }
  if (classify_shape(t).monotone_decreasing) {
    out.verdict = Verdict::kAlwaysTrue;
    return out;
  }
  out.verdict = Verdict::kNpComplete;
  out.chain = build_np_chain(t);
  const ChainReport report = validate_chain(t, *out.chain);
  if (!report.ok) {
    std::string detail;
    for (const auto& issue : report.issues) detail += " " + issue;
    throw std::logic_error("classifier produced an invalid chain for " + t.to_string() +
                           ":" + detail);
  }
  return out;
}

ChainReport validate_chain(const Pattern& t, const ReductionChain& chain) {
  ChainReport report;
  const auto& steps = chain.steps;
  auto flag = [&](int i, const std::string& msg) {
    report.issues.push_back("step " + std::to_string(i) + ": " + msg);
    report.per_step_ok[static_cast<size_t>(i)] = false;
  };
  if (steps.empty()) {
    report.issues.push_back("chain is empty");
    return report;
  }
  report.per_step_ok.assign(steps.size(), true);
  if (!(steps.front().pattern == t))
    flag(0, "chain does not start from the classified pattern");
  for (size_t i = 0; i < steps.size(); ++i) {
    const ReductionStep& s = steps[i];
    const bool last = i + 1 == steps.size();
    switch (s.kind) {
      case StepKind::kBase:
        if (!last) flag(static_cast<int>(i), "base rule before the end of the chain");
        if (!hypothesis_check(s.rule, s.pattern, s.amount))
          flag(static_cast<int>(i), "base rule " + s.rule + " does not apply");
        break;
      case StepKind::kHalve: {
        if (last) {
          flag(static_cast<int>(i), "halve step cannot end a chain");
          break;
        }
        const Pattern& next = steps[i + 1].pattern;
        if (!(next == s.pattern.half()))
          flag(static_cast<int>(i), "next pattern is not the half-pattern");
        if (!is_double_of(s.pattern, next))
          flag(static_cast<int>(i), "pattern is not a double of the next");
        if (s.pattern.max_one_index() <= 0)
          flag(static_cast<int>(i), "halving makes no progress");
        break;
      }
      case StepKind::kShift: {
        if (last || steps[i + 1].kind != StepKind::kPrepend10 ||
            steps[i + 1].amount * 2 != s.amount) {
          flag(static_cast<int>(i), "shift must be followed by its prepend step");
          break;
        }
        if (s.amount <= 0 || s.amount % 2 != 0)
          flag(static_cast<int>(i), "shift amount must be a positive even number");
        if (!(steps[i + 1].pattern == s.pattern.shifted_left(s.amount)))
          flag(static_cast<int>(i), "next pattern is not the shifted pattern");
        break;
      }
      case StepKind::kPrepend10: {
        if (i == 0 || steps[i - 1].kind != StepKind::kShift ||
            steps[i - 1].amount != 2 * s.amount) {
          flag(static_cast<int>(i), "prepend step must directly follow its shift");
          break;
        }
        if (s.pattern.query(0) != 1)
          flag(static_cast<int>(i), "prepending 1,0 needs a pattern starting with 1");
        if (!(steps[i - 1].pattern == prepend_one_zero(s.pattern, s.amount)))
          flag(static_cast<int>(i), "prepending does not recover the previous pattern");
        if (last) {
          flag(static_cast<int>(i), "prepend step cannot end a chain");
          break;
        }
        if (!(steps[i + 1].pattern == s.pattern))
          flag(static_cast<int>(i), "next step must continue from the shifted pattern");
        break;
      }
    }
  }
  report.ok = report.issues.empty();
  return report;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kAlwaysFalse: return "ALWAYS_FALSE";
    case Verdict::kAlwaysTrue: return "ALWAYS_TRUE";
    case Verdict::kPolyKnown: return "POLY_KNOWN";
    case Verdict::kNpComplete: return "NP_COMPLETE";
    case Verdict::kOutOfScopeInfinite: return "OUT_OF_SCOPE_INFINITE";
  }
  return "UNKNOWN";
}

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::kHalve: return "HALVE";
    case StepKind::kShift: return "SHIFT";
    case StepKind::kPrepend10: return "PREPEND_10";
    case StepKind::kBase: return "BASE";
  }
  return "UNKNOWN";
}

}  // namespace pgg
