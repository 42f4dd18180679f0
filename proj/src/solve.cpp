#include <chrono>
#include <stdexcept>

#include "pgg/sat.hpp"
#include "pgg/solve.hpp"

namespace pgg {

SolveResult solve_ntpne(const PggInstance& inst, SolveMethod method, int cap) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  if (method == SolveMethod::kBrute) {
    SearchStats stats;
    std::vector<Profile> hits = enumerate_ntpne(inst, /*limit=*/1, cap, &stats);
    result.nodes_explored = stats.visited;
    if (!hits.empty()) {
      result.status = SolveStatus::kFound;
      result.witness = std::move(hits.front());
    }
  } else {
    CnfEncoding enc = encode_ntpne_cnf(inst);
    SatSolver solver(enc.variable_count);
    for (const auto& clause : enc.clauses) solver.add_clause(clause);
    if (solver.solve() == SatResult::kSat) {
      Profile s(static_cast<size_t>(inst.graph.node_count()), 0);
      for (int i = 0; i < inst.graph.node_count(); ++i)
        s[static_cast<size_t>(i)] =
            solver.value(enc.node_var[static_cast<size_t>(i)]) ? 1 : 0;
      if (!is_ntpne(inst, s))
        throw std::logic_error("cnf model is not a non-trivial equilibrium");
      result.status = SolveStatus::kFound;
      result.witness = std::move(s);
    }
    result.nodes_explored = solver.stats().decisions;
    result.conflicts = solver.stats().conflicts;
  }
  const auto end = std::chrono::steady_clock::now();
  result.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
  return result;
}

}  // namespace pgg
