// Command-line workbench: solve/verify equilibrium existence, compile
// one-in-three formulas into games, classify patterns, emit gadgets, and run
// best-response dynamics. Exit codes: 0 found/ok, 1 none/failed, 2 error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "pgg/classify.hpp"
#include "pgg/core.hpp"
#include "pgg/gadgets.hpp"
#include "pgg/io.hpp"
#include "pgg/reductions.hpp"
#include "pgg/solve.hpp"
#include "pgg/util.hpp"

namespace {

using namespace pgg;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int run_solve(const std::string& graph_path, const std::string& pattern_text,
              const std::string& method_name, int cap,
              const std::string& format, const std::string& out_path) {
  const PggInstance inst{read_graph_file(graph_path), Pattern::parse(pattern_text)};
  const SolveMethod method =
      method_name == "cnf" ? SolveMethod::kCnf : SolveMethod::kBrute;
  const SolveResult result = solve_ntpne(inst, method, cap);
  if (format == "json") {
    emit(dump(solve_result_json(inst, method, result)), out_path);
  } else {
    std::ostringstream text;
    if (result.status == SolveStatus::kFound)
      text << "FOUND " << format_profile(*result.witness) << '\n';
    else
      text << "NONE\n";
    text << "explored " << result.nodes_explored;
    if (method == SolveMethod::kCnf) text << " decisions, " << result.conflicts
                                          << " conflicts";
    else text << " profiles";
    text << '\n';
    emit(text.str(), out_path);
  }
  return result.status == SolveStatus::kFound ? 0 : 1;
}

int run_verify(const std::string& graph_path, const std::string& pattern_text,
               const std::string& profile_text) {
  const PggInstance inst{read_graph_file(graph_path), Pattern::parse(pattern_text)};
  const Profile s = parse_profile(profile_text);
  if (const auto deviator = find_deviator(inst, s)) {
    std::cout << "NOT_EQUILIBRIUM deviator " << *deviator << " (plays "
              << int(s[static_cast<size_t>(*deviator)]) << ", best response "
              << inst.pattern.query(productive_neighbors(inst.graph, s, *deviator))
              << ")\n";
    return 1;
  }
  if (!is_ntpne(inst, s)) {
    std::cout << "TRIVIAL equilibrium, but every node plays 0\n";
    return 1;
  }
  std::cout << "NTPNE\n";
  return 0;
}

int run_reduce(const std::string& cnf_path, const std::string& format,
               const std::string& out_prefix) {
  const OneInThreeFormula f = read_formula_file(cnf_path);
  const auto [inst, lm] = reduce_1in3_to_pgg(f);
  const Graph& g = inst.graph;

  std::vector<int> histogram(static_cast<size_t>(g.max_degree()) + 1, 0);
  for (int i = 0; i < g.node_count(); ++i) ++histogram[static_cast<size_t>(g.degree(i))];
  std::ostringstream report;
  report << "nodes " << g.node_count() << ", edges " << g.edge_count()
         << ", max degree " << g.max_degree() << '\n';
  report << "degree histogram:";
  for (size_t d = 0; d < histogram.size(); ++d)
    if (histogram[d] > 0) report << ' ' << d << ':' << histogram[d];
  report << '\n';
  if (g.max_degree() > 6) throw std::logic_error("reduction exceeded degree 6");

  if (out_prefix.empty()) {
    if (format == "dot") {
      std::cout << reduction_dot(g, lm);
    } else if (format == "json") {
      nlohmann::ordered_json j;
      j["graph"] = graph_json(g);
      j["labels"] = label_map_json(lm);
      std::cout << dump(j);
    } else {
      std::cout << report.str();
    }
    return 0;
  }
  {
    std::ofstream out(out_prefix + ".graph");
    if (!out) throw std::runtime_error("cannot write " + out_prefix + ".graph");
    write_graph(out, g);
  }
  emit(dump(label_map_json(lm)), out_prefix + ".labels.json");
  if (format == "dot") emit(reduction_dot(g, lm), out_prefix + ".dot");
  std::cout << report.str();
  return 0;
}

int run_classify(const std::string& pattern_text, const std::string& format,
                 const std::string& out_path) {
  const Pattern t = Pattern::parse(pattern_text);
  const HardnessVerdict hv = classify(t);
  if (format == "text") {
    std::ostringstream text;
    text << t.to_string() << ": " << verdict_name(hv.verdict) << '\n';
    if (hv.chain)
      for (const ReductionStep& step : hv.chain->steps) {
        text << "  " << step_kind_name(step.kind) << ' ' << step.pattern.to_string();
        if (step.amount != 0) text << " amount " << step.amount;
        if (step.kind == StepKind::kBase) text << " rule " << step.rule;
        text << '\n';
      }
    emit(text.str(), out_path);
  } else {
    emit(dump(verdict_json(t, hv)), out_path);
  }
  return 0;
}

int run_gadget(const std::string& kind, int m, const std::string& format,
               const std::string& out_path) {
  const PortedSubgraph g = make_gadget(kind, m);
  if (format == "dot") {
    emit(gadget_dot(g), out_path);
  } else if (format == "json") {
    emit(dump(gadget_json(g)), out_path);
  } else {
    std::ostringstream text;
    text << g.kind << ": " << g.graph.node_count() << " nodes, "
         << g.graph.edge_count() << " edges, pattern "
         << g.witness_pattern.to_string() << '\n';
    for (const auto& [name, id] : g.ports)
      text << "  port " << name << " = node " << id << '\n';
    emit(text.str(), out_path);
  }
  return 0;
}

int run_dynamics(const std::string& graph_path, const std::string& pattern_text,
                 const std::string& profile_text, const std::string& schedule_name,
                 int max_steps, std::uint64_t seed, const std::string& format,
                 const std::string& out_path) {
  const PggInstance inst{read_graph_file(graph_path), Pattern::parse(pattern_text)};
  Profile start;
  if (!profile_text.empty()) {
    start = parse_profile(profile_text);
  } else {
    start.assign(static_cast<size_t>(inst.graph.node_count()), 0);
    SplitMix64 rng(seed);
    for (auto& v : start) v = static_cast<std::uint8_t>(rng.below(2));
  }
  const Schedule schedule = schedule_name == "lowest" ? Schedule::kLowestDeviator
                                                      : Schedule::kRoundRobin;
  const DynamicsTrace trace = br_dynamics(inst, start, schedule, max_steps);
  if (format == "text") {
    std::ostringstream text;
    const char* terminal = trace.terminal == DynamicsTerminal::kFixpoint ? "FIXPOINT"
                           : trace.terminal == DynamicsTerminal::kCycle ? "CYCLE"
                                                                        : "CAP_REACHED";
    text << terminal << " after " << trace.steps.size() << " flips, final "
         << format_profile(trace.final_profile) << '\n';
    emit(text.str(), out_path);
  } else {
    emit(dump(trace_json(trace)), out_path);
  }
  return 0;
}

int run_selftest() {
  bool all = true;
  for (const std::string kind : {"clause", "negation", "copy", "force1", "add1"}) {
    const PortedSubgraph g = make_gadget(kind, 1);
    const ContractReport report =
        verify_gadget_contract(g, g.witness_pattern, contract_for(kind));
    for (const RequirementResult& r : report.results) {
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << kind << '.' << r.name
                << " (" << r.configs << " configurations)\n";
      all = all && r.passed;
    }
  }
  std::cout << (all ? "selftest passed\n" : "selftest FAILED\n");
  return all ? 0 : 1;
}

int run_encode(const std::string& graph_path, const std::string& pattern_text,
               const std::string& out_path) {
  const PggInstance inst{read_graph_file(graph_path), Pattern::parse(pattern_text)};
  const CnfEncoding enc = encode_ntpne_cnf(inst);
  std::ostringstream out;
  write_dimacs(out, enc);
  emit(out.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Public goods games on graphs: equilibria, gadgets, reductions"};
  app.require_subcommand(1);

  std::string graph_path, pattern_text, profile_text, cnf_path, out_path;
  std::string method = "brute", format = "text", schedule = "roundrobin";
  std::string gadget_kind;
  int cap = default_exhaustive_cap;
  int steps = 10000;
  int m = 1;
  std::uint64_t seed = 1;

  CLI::App* solve = app.add_subcommand("solve", "Find a non-trivial equilibrium");
  solve->add_option("--graph", graph_path)->required();
  solve->add_option("--pattern", pattern_text)->required();
  solve->add_option("--method", method)->check(CLI::IsMember({"brute", "cnf"}));
  solve->add_option("--cap", cap);
  solve->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  solve->add_option("--out", out_path);

  CLI::App* verify = app.add_subcommand("verify", "Check a profile for equilibrium");
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--pattern", pattern_text)->required();
  verify->add_option("--profile", profile_text)->required();

  CLI::App* reduce = app.add_subcommand("reduce", "Compile a one-in-three formula");
  reduce->add_option("--cnf", cnf_path)->required();
  reduce->add_option("--format", format)
      ->check(CLI::IsMember({"json", "text", "dot"}));
  reduce->add_option("--out", out_path, "output file prefix");

  CLI::App* classify_cmd = app.add_subcommand("classify", "Pattern complexity verdict");
  classify_cmd->add_option("--pattern", pattern_text)->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  classify_cmd->add_option("--out", out_path);

  CLI::App* gadget = app.add_subcommand("gadget", "Emit a building-block gadget");
  gadget->add_option("name", gadget_kind)
      ->required()
      ->check(CLI::IsMember({"clause", "negation", "copy", "force1", "add1"}));
  gadget->add_option("--m", m);
  gadget->add_option("--format", format)
      ->check(CLI::IsMember({"json", "text", "dot"}));
  gadget->add_option("--out", out_path);

  CLI::App* dynamics = app.add_subcommand("dynamics", "Run best-response dynamics");
  dynamics->add_option("--graph", graph_path)->required();
  dynamics->add_option("--pattern", pattern_text)->required();
  dynamics->add_option("--profile", profile_text, "start profile (default: seeded random)");
  dynamics->add_option("--schedule", schedule)
      ->check(CLI::IsMember({"roundrobin", "lowest"}));
  dynamics->add_option("--cap", steps, "maximum flips");
  dynamics->add_option("--seed", seed);
  dynamics->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  dynamics->add_option("--out", out_path);

  CLI::App* selftest = app.add_subcommand("selftest", "Exhaustive gadget contract suite");

  CLI::App* encode = app.add_subcommand("encode", "Export the equilibrium CNF as DIMACS");
  encode->add_option("--graph", graph_path)->required();
  encode->add_option("--pattern", pattern_text)->required();
  encode->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(graph_path, pattern_text, method, cap, format, out_path);
    if (verify->parsed()) return run_verify(graph_path, pattern_text, profile_text);
    if (reduce->parsed()) return run_reduce(cnf_path, format, out_path);
    if (classify_cmd->parsed()) return run_classify(pattern_text, format, out_path);
    if (gadget->parsed()) return run_gadget(gadget_kind, m, format, out_path);
    if (dynamics->parsed())
      return run_dynamics(graph_path, pattern_text, profile_text, schedule, steps,
                          seed, format, out_path);
    if (selftest->parsed()) return run_selftest();
    if (encode->parsed()) return run_encode(graph_path, pattern_text, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
