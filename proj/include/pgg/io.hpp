#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pgg/classify.hpp"
#include "pgg/core.hpp"
#include "pgg/gadgets.hpp"
#include "pgg/reductions.hpp"
#include "pgg/solve.hpp"

namespace pgg {

// Plain-text graph format: '#' starts a comment, the first data line is
// "<nodes> <edges>", followed by one "<u> <v>" line per edge. Parsing is
// strict; anything after the declared edges is an error.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// DIMACS-style input for one-in-three formulas: 'c' comment lines, a
// "p cnf <variables> <clauses>" header, then zero-terminated clauses of
// exactly three literals each (1-based, negative means negated).
OneInThreeFormula parse_formula(std::istream& in);
OneInThreeFormula read_formula_file(const std::string& path);

// Standard DIMACS CNF output, with a comment line noting which variable
// carries each node's decision.
void write_dimacs(std::ostream& out, const CnfEncoding& enc);

// Graphviz exports.
std::string graph_dot(const Graph& g);
std::string gadget_dot(const PortedSubgraph& g);
std::string reduction_dot(const Graph& g, const LabelMap& lm);

// JSON views. All output is deterministic: fixed key order, no timestamps,
// no timing fields.
nlohmann::ordered_json graph_json(const Graph& g);
nlohmann::ordered_json solve_result_json(const PggInstance& inst,
                                         SolveMethod method,
                                         const SolveResult& result);
nlohmann::ordered_json verdict_json(const Pattern& t, const HardnessVerdict& hv);
nlohmann::ordered_json label_map_json(const LabelMap& lm);
nlohmann::ordered_json gadget_json(const PortedSubgraph& g);
nlohmann::ordered_json contract_report_json(const ContractReport& report);
nlohmann::ordered_json trace_json(const DynamicsTrace& trace);

}  // namespace pgg
