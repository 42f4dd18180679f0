#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "pgg/io.hpp"
#include "pgg/util.hpp"

using namespace pgg;

TEST_CASE("graph text round trip") {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 4}});
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in(out.str());
  const Graph back = parse_graph(in);
  CHECK(back.node_count() == 5);
  CHECK(back.edges() == g.edges());
}

TEST_CASE("graph parser tolerates comments and spacing") {
  std::istringstream in("# a graph\n 3 2 # header\n0 1\n\n  1   2 # done\n");
  const Graph g = parse_graph(in);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("graph parser rejects malformed input") {
  auto reject = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_graph(in), std::invalid_argument);
  };
  reject("");
  reject("3");
  reject("3 2\n0 1\n");          // missing an edge
  reject("3 1\n0 1\n2 0\n");     // trailing edge
  reject("3 1\n0 x\n");          // non-numeric endpoint
  reject("-1 0\n");              // negative header
  reject("2 1\n0 2\n");          // endpoint out of range
  reject("2 1\n1 1\n");          // self-loop
}

TEST_CASE("formula parse accepts the documented shape") {
  std::istringstream in(
      "c exactly one literal per clause must hold\n"
      "p cnf 3 2\n"
      "1 -2 3 0\n"
      "3 3 2 0\n");
  const OneInThreeFormula f = parse_formula(in);
  CHECK(f.variable_count == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0][0].var == 0);
  CHECK_FALSE(f.clauses[0][0].negated);
  CHECK(f.clauses[0][1].var == 1);
  CHECK(f.clauses[0][1].negated);
  CHECK(f.clauses[1][0].var == 2);
}

TEST_CASE("formula parse rejects malformed input") {
  auto reject = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_formula(in), std::invalid_argument);
  };
  reject("p cnf 2 1\n1 2 0\n");        // two literals only
  reject("p cnf 2 1\n1 2 1 2 0\n");    // four literals
  reject("p cnf 2 1\n1 2 3 0\n");      // variable out of range
  reject("p cnf 2 2\n1 1 2 0\n");      // missing second clause
  reject("cnf 2 1\n1 1 2 0\n");        // no header keyword
  reject("p cnf 0 0\n");               // no variables
  reject("p cnf 2 1\n1 1 2 0\n9\n");   // trailing tokens
}

TEST_CASE("dimacs export matches its own header") {
  const PggInstance inst{make_path(3), zero_or_two_pattern()};
  const CnfEncoding enc = encode_ntpne_cnf(inst);
  std::ostringstream out;
  write_dimacs(out, enc);
  std::istringstream in(out.str());
  std::string line;
  int clause_lines = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.rfind("c", 0) == 0) continue;
    if (line.rfind("p cnf ", 0) == 0) {
      saw_header = true;
      std::istringstream header(line.substr(6));
      int vars = 0;
      size_t clauses = 0;
      header >> vars >> clauses;
      CHECK(vars == enc.variable_count);
      CHECK(clauses == enc.clauses.size());
      continue;
    }
    ++clause_lines;
    CHECK(line.back() == '0');
  }
  CHECK(saw_header);
  CHECK(clause_lines == static_cast<int>(enc.clauses.size()));
}

TEST_CASE("dot exports carry the structure") {
  const std::string plain = graph_dot(make_cycle(4));
  CHECK(plain.find("n0 -- n1") != std::string::npos);
  CHECK(plain.find("n0 -- n3") != std::string::npos);

  const std::string gadget = gadget_dot(make_negation_gadget());
  CHECK(gadget.find("doublecircle") != std::string::npos);
  CHECK(gadget.find("t2") != std::string::npos);

  OneInThreeFormula f;
  f.variable_count = 3;
  f.clauses.push_back({Literal{0, false}, Literal{0, true}, Literal{1, false}});
  const auto [inst, lm] = reduce_1in3_to_pgg(f);
  const std::string reduction = reduction_dot(inst.graph, lm);
  CHECK(reduction.find("cluster0") != std::string::npos);
  CHECK(reduction.find("clause 0") != std::string::npos);
  CHECK(reduction.find("negation 0") != std::string::npos);
}

TEST_CASE("solve reports are byte-stable and carry no timing") {
  const PggInstance inst{make_cycle(5), zero_or_two_pattern()};
  auto render = [&] {
    const SolveResult r = solve_ntpne(inst, SolveMethod::kCnf);
    return solve_result_json(inst, SolveMethod::kCnf, r).dump(2);
  };
  const std::string first = render();
  CHECK(first == render());
  CHECK(first.find("elapsed") == std::string::npos);
  CHECK(first.find("FOUND") != std::string::npos);
}

TEST_CASE("verdict json embeds the validated chain") {
  const nlohmann::ordered_json j =
      verdict_json(Pattern::parse("101"), classify(Pattern::parse("101")));
  CHECK(j["pattern"] == "101");
  CHECK(j["verdict"] == "NP_COMPLETE");
  CHECK(j["chain_valid"] == true);
  REQUIRE(j["chain"].size() == 1);
  CHECK(j["chain"][0]["kind"] == "BASE");
  CHECK(j["chain"][0]["rule"] == "ZERO_OR_TWO_CORE");
  CHECK(j["chain"][0]["rule_source"] == "constructive");
  CHECK(j["chain"][0]["checked"] == true);

  const nlohmann::ordered_json constant = verdict_json(Pattern(), classify(Pattern()));
  CHECK(constant["verdict"] == "ALWAYS_FALSE");
  CHECK_FALSE(constant.contains("chain"));
}

TEST_CASE("label map json names every node") {
  OneInThreeFormula f;
  f.variable_count = 3;
  f.clauses.push_back({Literal{0, false}, Literal{1, false}, Literal{2, false}});
  const auto [inst, lm] = reduce_1in3_to_pgg(f);
  const nlohmann::ordered_json j = label_map_json(lm);
  CHECK(j["labels"].size() == 21);
  CHECK(j["labels"][0]["role"] == "l1");
  CHECK(j["clauses"][0]["literal_nodes"] == nlohmann::ordered_json({0, 1, 2}));
  CHECK(j["copies"].empty());
}

TEST_CASE("trace json renders hashes as fixed-width hex") {
  const PggInstance inst{make_path(2), Pattern::parse("11")};
  const DynamicsTrace trace =
      br_dynamics(inst, parse_profile("00"), Schedule::kRoundRobin, 10);
  const nlohmann::ordered_json j = trace_json(trace);
  CHECK(j["terminal"] == "FIXPOINT");
  CHECK(j["final_profile"] == "11");
  REQUIRE(j["steps"].size() == 2);
  const std::string h = j["steps"][0]["profile_hash"];
  CHECK(h.size() == 16);
  CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
}

TEST_CASE("contract report json keeps witnesses and counterexamples") {
  const PortedSubgraph g = make_negation_gadget();
  const ContractReport report =
      verify_gadget_contract(g, g.witness_pattern, negation_gadget_contract());
  const nlohmann::ordered_json j = contract_report_json(report);
  CHECK(j["all_passed"] == true);
  CHECK(j["requirements"].size() == 4);
  for (const auto& r : j["requirements"]) CHECK(r["configs"].get<int>() > 0);
}

TEST_CASE("gadget json lists ports and witnesses") {
  const nlohmann::ordered_json j = gadget_json(make_copy_gadget());
  CHECK(j["kind"] == "copy");
  CHECK(j["ports"]["u_hook"] == 6);
  CHECK(j["boundary"].size() == 2);
  CHECK(j["witnesses"].size() == 2);
  CHECK(j["witness_pattern"] == "101");
}

TEST_CASE("missing files raise runtime errors") {
  CHECK_THROWS_AS(read_graph_file("/nonexistent/g.graph"), std::runtime_error);
  CHECK_THROWS_AS(read_formula_file("/nonexistent/f.cnf"), std::runtime_error);
}
