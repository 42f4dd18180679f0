#include "pgg/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace pgg {

SatSolver::SatSolver(int variable_count) : nvars_(variable_count) {
  if (variable_count < 0) throw std::invalid_argument("negative variable count");
  const auto n = static_cast<size_t>(variable_count);
  watches_.resize(2 * n);
  assigns_.assign(n, kUndef);
  level_.assign(n, 0);
  reason_.assign(n, -1);
  seen_.assign(n, 0);
}

void SatSolver::add_clause(const std::vector<int>& clause) {
  if (unsat_) return;
  std::vector<int> lits;
  lits.reserve(clause.size());
  for (int ext : clause) {
    if (ext == 0 || std::abs(ext) > nvars_)
      throw std::invalid_argument("literal out of range");
    lits.push_back(2 * (std::abs(ext) - 1) + (ext < 0 ? 1 : 0));
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (size_t i = 0; i + 1 < lits.size(); ++i)
    if ((lits[i] ^ 1) == lits[i + 1]) return;  // tautology
  if (lits.empty()) {
    unsat_ = true;
    return;
  }
  if (lits.size() == 1) {
    switch (value_lit(lits[0])) {
      case kTrue:
        return;
      case kFalse:
        unsat_ = true;
        return;
      case kUndef:
        enqueue(lits[0], -1);
        return;
    }
  }
  const int ci = static_cast<int>(clauses_.size());
  clauses_.push_back(std::move(lits));
  watches_[static_cast<size_t>(clauses_[static_cast<size_t>(ci)][0])].push_back(ci);
  watches_[static_cast<size_t>(clauses_[static_cast<size_t>(ci)][1])].push_back(ci);
}

void SatSolver::enqueue(int lit, int reason) {
  const auto v = static_cast<size_t>(var_of(lit));
  assigns_[v] = static_cast<Lbool>(1 ^ (lit & 1));
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(lit);
}

int SatSolver::propagate() {
  int confl = -1;
  while (qhead_ < static_cast<int>(trail_.size())) {
    const int p = trail_[static_cast<size_t>(qhead_++)];
    ++stats_.propagations;
    const int fl = p ^ 1;  // literal that just became false
    auto& ws = watches_[static_cast<size_t>(fl)];
    size_t keep = 0;
    size_t i = 0;
    while (i < ws.size()) {
      const int ci = ws[i++];
      auto& c = clauses_[static_cast<size_t>(ci)];
      if (c[0] == fl) std::swap(c[0], c[1]);
      if (value_lit(c[0]) == kTrue) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (size_t k = 2; k < c.size(); ++k) {
        if (value_lit(c[k]) != kFalse) {
          std::swap(c[1], c[k]);
          watches_[static_cast<size_t>(c[1])].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (value_lit(c[0]) == kFalse) {
        while (i < ws.size()) ws[keep++] = ws[i++];
        confl = ci;
        qhead_ = static_cast<int>(trail_.size());
        break;
      }
      enqueue(c[0], ci);
    }
    ws.resize(keep);
    if (confl != -1) break;
  }
  return confl;
}

void SatSolver::analyze(int confl, std::vector<int>& out_learnt, int& out_btlevel) {
  out_learnt.clear();
  out_learnt.push_back(0);  // slot for the asserting literal
  int counter = 0;
  int p = -1;
  int index = static_cast<int>(trail_.size()) - 1;
  do {
    const auto& c = clauses_[static_cast<size_t>(confl)];
    // For a reason clause the implied literal sits at index 0 and equals p.
    for (size_t j = (p == -1 ? 0u : 1u); j < c.size(); ++j) {
      const int q = c[j];
      const auto v = static_cast<size_t>(var_of(q));
      if (!seen_[v] && level_[v] > 0) {
        seen_[v] = 1;
        if (level_[v] >= decision_level())
          ++counter;
        else
          out_learnt.push_back(q);
      }
    }
    while (!seen_[static_cast<size_t>(var_of(trail_[static_cast<size_t>(index)]))]) --index;
    p = trail_[static_cast<size_t>(index)];
    confl = reason_[static_cast<size_t>(var_of(p))];
    seen_[static_cast<size_t>(var_of(p))] = 0;
    --index;
    --counter;
  } while (counter > 0);
  out_learnt[0] = p ^ 1;
  for (size_t j = 1; j < out_learnt.size(); ++j)
    seen_[static_cast<size_t>(var_of(out_learnt[j]))] = 0;
  if (out_learnt.size() == 1) {
    out_btlevel = 0;
  } else {
    size_t best = 1;
    for (size_t j = 2; j < out_learnt.size(); ++j)
      if (level_[static_cast<size_t>(var_of(out_learnt[j]))] >
          level_[static_cast<size_t>(var_of(out_learnt[best]))])
        best = j;
    std::swap(out_learnt[1], out_learnt[best]);
    out_btlevel = level_[static_cast<size_t>(var_of(out_learnt[1]))];
  }
}

void SatSolver::cancel_until(int level) {
  if (decision_level() <= level) return;
  const int bound = trail_lim_[static_cast<size_t>(level)];
  for (int i = static_cast<int>(trail_.size()) - 1; i >= bound; --i) {
    const auto v = static_cast<size_t>(var_of(trail_[static_cast<size_t>(i)]));
    assigns_[v] = kUndef;
    reason_[v] = -1;
  }
  trail_.resize(static_cast<size_t>(bound));
  trail_lim_.resize(static_cast<size_t>(level));
  qhead_ = bound;
}

SatResult SatSolver::solve() {
  if (unsat_) return SatResult::kUnsat;
  for (;;) {
    const int confl = propagate();
    if (confl != -1) {
      ++stats_.conflicts;
      if (decision_level() == 0) return SatResult::kUnsat;
      std::vector<int> learnt;
      int btlevel = 0;
      analyze(confl, learnt, btlevel);
      cancel_until(btlevel);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        const int ci = static_cast<int>(clauses_.size());
        clauses_.push_back(learnt);
        watches_[static_cast<size_t>(learnt[0])].push_back(ci);
        watches_[static_cast<size_t>(learnt[1])].push_back(ci);
        enqueue(learnt[0], ci);
      }
      continue;
    }
    int branch = -1;
    for (int v = 0; v < nvars_; ++v) {
      if (assigns_[static_cast<size_t>(v)] == kUndef) {
        branch = v;
        break;
      }
    }
    if (branch == -1) return SatResult::kSat;
    ++stats_.decisions;
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(2 * branch + 1, -1);  // try false first
  }
}

bool SatSolver::value(int var) const {
  if (var < 1 || var > nvars_) throw std::invalid_argument("variable out of range");
  const Lbool v = assigns_[static_cast<size_t>(var - 1)];
  if (v == kUndef) throw std::logic_error("variable unassigned; call solve() first");
  return v == kTrue;
}

}  // namespace pgg
