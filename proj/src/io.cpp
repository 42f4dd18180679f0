#include "pgg/io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pgg {

namespace {

// Strips comments and blank lines, yielding one whitespace-token at a time.
// A line whose first non-blank character is the comment character is always
// skipped whole; with mid_line set the rest of a line is also dropped from
// the first comment character onward ('#' style), otherwise the character
// only counts at the start of a line ('c' style, where data may contain it).
class TokenReader {
 public:
  TokenReader(std::istream& in, char comment, bool mid_line)
      : in_(in), comment_(comment), mid_line_(mid_line) {}

  bool next(std::string& token) {
    while (true) {
      if (line_ >> token) return true;
      std::string raw;
      if (!std::getline(in_, raw)) return false;
      const size_t first = raw.find_first_not_of(" \t\r");
      if (first != std::string::npos && raw[first] == comment_) continue;
      if (mid_line_) {
        const size_t hash = raw.find(comment_);
        if (hash != std::string::npos) raw.erase(hash);
      }
      line_ = std::istringstream(raw);
    }
  }

  int next_int(const char* what) {
    std::string token;
    if (!next(token)) throw std::invalid_argument(std::string("missing ") + what);
    try {
      size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used == token.size()) return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("bad ") + what + ": " + token);
  }

  void expect_end(const char* what) {
    std::string token;
    if (next(token))
      throw std::invalid_argument(std::string("unexpected trailing input in ") +
                                  what + ": " + token);
  }

 private:
  std::istream& in_;
  char comment_;
  bool mid_line_;
  std::istringstream line_;
};

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

const char* verdict_key(Verdict v) {
  switch (v) {
    case Verdict::kAlwaysFalse: return "ALWAYS_FALSE";
    case Verdict::kAlwaysTrue: return "ALWAYS_TRUE";
    case Verdict::kPolyKnown: return "POLY_KNOWN";
    case Verdict::kNpComplete: return "NP_COMPLETE";
    case Verdict::kOutOfScopeInfinite: return "OUT_OF_SCOPE_INFINITE";
  }
  return "?";
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

nlohmann::ordered_json profile_json(const Profile& s) {
  return nlohmann::ordered_json(format_profile(s));
}

}  // namespace

Graph parse_graph(std::istream& in) {
  TokenReader reader(in, '#', true);
  const int n = reader.next_int("node count");
  const int m = reader.next_int("edge count");
  if (n < 0 || m < 0) throw std::invalid_argument("negative graph header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    edges.emplace_back(reader.next_int("edge endpoint"),
                       reader.next_int("edge endpoint"));
  reader.expect_end("graph");
  return Graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

OneInThreeFormula parse_formula(std::istream& in) {
  TokenReader reader(in, 'c', false);
  std::string token;
  if (!reader.next(token) || token != "p")
    throw std::invalid_argument("expected 'p cnf' header");
  if (!reader.next(token) || token != "cnf")
    throw std::invalid_argument("expected 'p cnf' header");
  OneInThreeFormula f;
  f.variable_count = reader.next_int("variable count");
  const int clause_count = reader.next_int("clause count");
  if (f.variable_count < 1 || clause_count < 0)
    throw std::invalid_argument("bad formula header");
  for (int c = 0; c < clause_count; ++c) {
    std::array<Literal, 3> clause;
    for (int slot = 0; slot < 3; ++slot) {
      const int lit = reader.next_int("literal");
      if (lit == 0) throw std::invalid_argument("clause has fewer than 3 literals");
      const int var = std::abs(lit) - 1;
      if (var >= f.variable_count)
        throw std::invalid_argument("literal exceeds variable count");
      clause[static_cast<size_t>(slot)] = {var, lit < 0};
    }
    if (reader.next_int("clause terminator") != 0)
      throw std::invalid_argument("clause has more than 3 literals");
    f.clauses.push_back(clause);
  }
  reader.expect_end("formula");
  return f;
}

OneInThreeFormula read_formula_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return parse_formula(in);
}

void write_dimacs(std::ostream& out, const CnfEncoding& enc) {
  for (size_t i = 0; i < enc.node_var.size(); ++i)
    out << "c node " << i << " var " << enc.node_var[i] << '\n';
  out << "p cnf " << enc.variable_count << ' ' << enc.clauses.size() << '\n';
  for (const auto& clause : enc.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

std::string graph_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph g {\n  node [shape=circle];\n";
  for (int i = 0; i < g.node_count(); ++i) out << "  n" << i << ";\n";
  for (auto [u, v] : g.edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string gadget_dot(const PortedSubgraph& g) {
  std::map<int, std::string> port_of;
  for (const auto& [name, id] : g.ports) port_of[id] = name;
  std::ostringstream out;
  out << "graph " << g.kind << " {\n  node [shape=circle];\n";
  for (int i = 0; i < g.graph.node_count(); ++i) {
    out << "  n" << i << " [label=\"" << g.node_roles[static_cast<size_t>(i)]
        << "\"";
    if (auto it = port_of.find(i); it != port_of.end())
      out << ", shape=doublecircle, xlabel=\"" << it->second << "\"";
    out << "];\n";
  }
  for (auto [u, v] : g.graph.edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string reduction_dot(const Graph& g, const LabelMap& lm) {
  std::ostringstream out;
  out << "graph reduction {\n  node [shape=circle];\n";
  // Labels are grouped by construction order, so each gadget instance forms
  // one contiguous id range and one cluster.
  size_t i = 0;
  int cluster = 0;
  while (i < lm.labels.size()) {
    const NodeLabel& head = lm.labels[i];
    out << "  subgraph cluster" << cluster++ << " {\n    label=\"" << head.gadget
        << ' ' << head.instance << "\";\n";
    while (i < lm.labels.size() && lm.labels[i].gadget == head.gadget &&
           lm.labels[i].instance == head.instance) {
      out << "    n" << i << " [label=\"" << lm.labels[i].role << "\"];\n";
      ++i;
    }
    out << "  }\n";
  }
  for (auto [u, v] : g.edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json graph_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["nodes"] = g.node_count();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

nlohmann::ordered_json solve_result_json(const PggInstance& inst,
                                         SolveMethod method,
                                         const SolveResult& result) {
  nlohmann::ordered_json j;
  j["nodes"] = inst.graph.node_count();
  j["edges"] = inst.graph.edge_count();
  j["pattern"] = inst.pattern.to_string();
  j["method"] = method == SolveMethod::kBrute ? "brute" : "cnf";
  j["status"] = result.status == SolveStatus::kFound ? "FOUND" : "NONE";
  j["witness"] =
      result.witness ? profile_json(*result.witness) : nlohmann::ordered_json();
  j["nodes_explored"] = result.nodes_explored;
  j["conflicts"] = result.conflicts;
  return j;
}

nlohmann::ordered_json verdict_json(const Pattern& t, const HardnessVerdict& hv) {
  nlohmann::ordered_json j;
  j["pattern"] = t.to_string();
  j["verdict"] = verdict_key(hv.verdict);
  if (hv.chain) {
    const ChainReport report = validate_chain(t, *hv.chain);
    auto steps = nlohmann::ordered_json::array();
    for (size_t i = 0; i < hv.chain->steps.size(); ++i) {
      const ReductionStep& step = hv.chain->steps[i];
      nlohmann::ordered_json sj;
      sj["kind"] = step_kind_name(step.kind);
      sj["pattern"] = step.pattern.to_string();
      if (step.kind != StepKind::kBase || step.amount != 0)
        sj["amount"] = step.amount;
      if (step.kind == StepKind::kBase) {
        sj["rule"] = step.rule;
        sj["rule_source"] = base_rule_source(step.rule);
      }
      sj["checked"] = report.per_step_ok[i];
      steps.push_back(std::move(sj));
    }
    j["chain"] = std::move(steps);
    j["chain_valid"] = report.ok;
  }
  return j;
}

nlohmann::ordered_json label_map_json(const LabelMap& lm) {
  nlohmann::ordered_json j;
  auto labels = nlohmann::ordered_json::array();
  for (size_t i = 0; i < lm.labels.size(); ++i) {
    const NodeLabel& label = lm.labels[i];
    labels.push_back({{"node", i},
                      {"gadget", label.gadget},
                      {"instance", label.instance},
                      {"role", label.role}});
  }
  j["labels"] = std::move(labels);
  auto clauses = nlohmann::ordered_json::array();
  for (const ClauseBlock& block : lm.clause_blocks)
    clauses.push_back({{"offset", block.offset},
                       {"literal_nodes", block.literal_nodes}});
  j["clauses"] = std::move(clauses);
  auto links = [](const std::vector<GadgetLink>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const GadgetLink& link : v)
      arr.push_back({{"offset", link.offset},
                     {"u_node", link.u_node},
                     {"v_node", link.v_node}});
    return arr;
  };
  j["copies"] = links(lm.copy_links);
  j["negations"] = links(lm.negation_links);
  return j;
}

nlohmann::ordered_json gadget_json(const PortedSubgraph& g) {
  nlohmann::ordered_json j;
  j["kind"] = g.kind;
  j["graph"] = graph_json(g.graph);
  j["ports"] = g.ports;
  auto boundary = nlohmann::ordered_json::array();
  for (const auto& [stub, port] : g.boundary)
    boundary.push_back({{"stub", stub}, {"port", port}});
  j["boundary"] = std::move(boundary);
  j["roles"] = g.node_roles;
  j["witness_pattern"] = g.witness_pattern.to_string();
  auto witnesses = nlohmann::ordered_json::array();
  for (const WitnessEntry& w : g.witness_table)
    witnesses.push_back(
        {{"boundary", w.boundary}, {"assignment", format_profile(w.assignment)}});
  j["witnesses"] = std::move(witnesses);
  return j;
}

nlohmann::ordered_json contract_report_json(const ContractReport& report) {
  nlohmann::ordered_json j;
  j["all_passed"] = report.all_passed;
  auto results = nlohmann::ordered_json::array();
  for (const RequirementResult& r : report.results) {
    nlohmann::ordered_json rj;
    rj["name"] = r.name;
    rj["passed"] = r.passed;
    rj["configs"] = r.configs;
    if (r.counterexample) rj["counterexample"] = format_profile(*r.counterexample);
    if (r.witness) rj["witness"] = format_profile(*r.witness);
    results.push_back(std::move(rj));
  }
  j["requirements"] = std::move(results);
  return j;
}

nlohmann::ordered_json trace_json(const DynamicsTrace& trace) {
  nlohmann::ordered_json j;
  switch (trace.terminal) {
    case DynamicsTerminal::kFixpoint: j["terminal"] = "FIXPOINT"; break;
    case DynamicsTerminal::kCycle: j["terminal"] = "CYCLE"; break;
    case DynamicsTerminal::kCapReached: j["terminal"] = "CAP_REACHED"; break;
  }
  j["final_profile"] = format_profile(trace.final_profile);
  j["flips"] = trace.steps.size();
  auto steps = nlohmann::ordered_json::array();
  for (const DynamicsStep& step : trace.steps)
    steps.push_back({{"step", step.step},
                     {"node", step.node},
                     {"profile_hash", hash_hex(step.profile_hash)}});
  j["steps"] = std::move(steps);
  return j;
}

}  // namespace pgg
