#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pgg/gadgets.hpp"
#include "support.hpp"

using namespace pgg;
namespace pt = pgg::testing;

namespace {

// Gadget graph plus one free node per declared stub, wired to its port.
Graph with_stubs(const PortedSubgraph& g) {
  std::vector<std::pair<int, int>> edges = g.graph.edges();
  int next = g.graph.node_count();
  for (const auto& [stub, port] : g.boundary) edges.emplace_back(g.ports.at(port), next++);
  return Graph(next, edges);
}

// Re-check a witness table against the raw definitions, sharing nothing with
// the builder's own validation pass.
void recheck_witnesses(const PortedSubgraph& g) {
  const Graph ext = with_stubs(g);
  for (const WitnessEntry& w : g.witness_table) {
    REQUIRE(w.assignment.size() == static_cast<size_t>(g.graph.node_count()));
    Profile s = w.assignment;
    if (g.boundary.empty()) {
      // No stubs: the boundary names ports, whose values must agree.
      for (const auto& [name, val] : w.boundary)
        REQUIRE(int(s[static_cast<size_t>(g.ports.at(name))]) == val);
    } else {
      for (const auto& [stub, port] : g.boundary) {
        (void)port;
        s.push_back(static_cast<std::uint8_t>(w.boundary.at(stub)));
      }
    }
    for (int i = 0; i < g.graph.node_count(); ++i)
      CHECK(s[static_cast<size_t>(i)] ==
            g.witness_pattern.query(pt::slow_productive(ext, s, i)));
  }
}

}  // namespace

TEST_CASE("clause gadget layout") {
  const PortedSubgraph g = make_clause_gadget();
  CHECK(g.graph.node_count() == 21);
  CHECK(g.graph.edge_count() == 30);
  CHECK(g.ports == std::map<std::string, int>{{"l1", 0}, {"l2", 1}, {"l3", 2}});
  CHECK(g.boundary.empty());
  // literal nodes form a triangle and have degree 4 inside the gadget
  CHECK(g.graph.has_edge(0, 1));
  CHECK(g.graph.has_edge(0, 2));
  CHECK(g.graph.has_edge(1, 2));
  for (int l = 0; l < 3; ++l) CHECK(g.graph.degree(l) == 4);
  CHECK(g.witness_table.size() == 3);
  recheck_witnesses(g);
}

TEST_CASE("negation gadget layout") {
  const PortedSubgraph g = make_negation_gadget();
  CHECK(g.graph.node_count() == 9);
  CHECK(g.graph.edge_count() == 12);
  CHECK(g.ports.at("hook") == 6);
  CHECK(g.node_roles[6] == "t2");
  CHECK(g.boundary.size() == 2);
  CHECK(g.witness_table.size() == 2);
  recheck_witnesses(g);
}

TEST_CASE("copy gadget layout") {
  const PortedSubgraph g = make_copy_gadget();
  CHECK(g.graph.node_count() == 20);
  CHECK(g.graph.edge_count() == 27);
  CHECK(g.ports.at("u_hook") == 6);
  CHECK(g.ports.at("v_hook") == 15);
  CHECK_FALSE(g.graph.has_edge(6, 15));  // hooks meet only through x
  CHECK(g.witness_table.size() == 2);
  recheck_witnesses(g);
}

TEST_CASE("force1 gadget layout scales with m") {
  for (int m = 1; m <= 10; ++m) {
    const PortedSubgraph g = make_force1_gadget(m);
    CHECK(g.graph.node_count() == 6 * m + 4);
    CHECK(g.graph.edge_count() == 6 * m + 4);
    CHECK(g.ports.at("a") == 3);
    CHECK(g.graph.degree(0) == 2 + 2 * m + 1);  // x: triangle + its antennas
    CHECK(g.graph.degree(1) == 2 + 2 * m);
    CHECK(g.witness_pattern == isolated_odd_pattern(m));
    recheck_witnesses(g);
  }
  CHECK_THROWS_AS(make_force1_gadget(0), std::invalid_argument);
}

TEST_CASE("add1 gadget layout scales with m") {
  for (int m = 1; m <= 8; ++m) {
    const PortedSubgraph g = make_add1_gadget(m);
    CHECK(g.graph.node_count() == 8 * m + 7);
    CHECK(g.graph.edge_count() == 2 * m * m + 10 * m + 6);
    CHECK(g.ports.at("b") == 2 * m + 2);
    CHECK(g.node_roles[static_cast<size_t>(2 * m + 2)] == "b");
    // x_1 is adjacent to every other clique node but not the bridge
    CHECK(g.graph.degree(0) == 2 * m + 1);
    CHECK_FALSE(g.graph.has_edge(0, 2 * m + 2));
    recheck_witnesses(g);
  }
  const PortedSubgraph g1 = make_add1_gadget(1);
  CHECK(g1.graph.node_count() == 15);
  CHECK(g1.graph.edge_count() == 18);
  CHECK_THROWS_AS(make_add1_gadget(0), std::invalid_argument);
}

TEST_CASE("gadget lookup by name") {
  CHECK(make_gadget("clause", 1).kind == "clause");
  CHECK(make_gadget("force1", 2).graph.node_count() == 16);
  CHECK_THROWS_AS(make_gadget("widget", 1), std::invalid_argument);
}

TEST_CASE("find_witness matches boundaries exactly") {
  const PortedSubgraph g = make_negation_gadget();
  CHECK(g.find_witness({{"u", 0}, {"v", 1}}) != nullptr);
  CHECK(g.find_witness({{"u", 0}, {"v", 0}}) == nullptr);
  CHECK(g.find_witness({{"u", 0}}) == nullptr);
}

TEST_CASE("clause gadget contract holds") {
  const PortedSubgraph g = make_clause_gadget();
  const ContractReport report =
      verify_gadget_contract(g, g.witness_pattern, clause_gadget_contract());
  for (const RequirementResult& r : report.results) {
    INFO(r.name);
    CHECK(r.passed);
    CHECK(r.configs > 0);
  }
  CHECK(report.all_passed);
  CHECK(report.results.size() == 7);
}

TEST_CASE("negation gadget contract holds") {
  const PortedSubgraph g = make_negation_gadget();
  const ContractReport report =
      verify_gadget_contract(g, g.witness_pattern, negation_gadget_contract());
  CHECK(report.all_passed);
  // the forall sweeps run over 2 stubs x gadget: both orientations show up
  for (const RequirementResult& r : report.results)
    if (r.witness) CHECK(r.witness->size() == 11);
}

TEST_CASE("copy gadget contract holds") {
  const PortedSubgraph g = make_copy_gadget();
  CHECK(verify_gadget_contract(g, g.witness_pattern, copy_gadget_contract()).all_passed);
}

TEST_CASE("force1 gadget contract holds for the first two sizes") {
  for (int m = 1; m <= 2; ++m) {
    const PortedSubgraph g = make_force1_gadget(m);
    const ContractReport report =
        verify_gadget_contract(g, g.witness_pattern, force1_gadget_contract());
    INFO("m = " << m);
    CHECK(report.all_passed);
  }
}

TEST_CASE("add1 gadget contract holds") {
  const PortedSubgraph g = make_add1_gadget(1);
  const ContractReport report =
      verify_gadget_contract(g, g.witness_pattern, add1_gadget_contract());
  CHECK(report.all_passed);
}

TEST_CASE("a false claim fails with a concrete counterexample") {
  const PortedSubgraph g = make_negation_gadget();
  GadgetContract wrong;
  wrong.push_back({"inputs_forced_equal", RequirementKind::kForallPne,
                   BoundaryMode::kStubs, {},
                   [](const ContractContext& ctx) {
                     return ctx.value("u") == ctx.value("v");
                   }});
  const ContractReport report = verify_gadget_contract(g, g.witness_pattern, wrong);
  CHECK_FALSE(report.all_passed);
  REQUIRE(report.results.size() == 1);
  REQUIRE(report.results[0].counterexample.has_value());
  // the counterexample is a consistent configuration violating the claim
  const Profile& s = *report.results[0].counterexample;
  CHECK(s.size() == 11);
  CHECK(s[9] != s[10]);  // stub values, appended after the 9 gadget nodes
}

TEST_CASE("an unsatisfiable pin combination fails an exists requirement") {
  const PortedSubgraph g = make_negation_gadget();
  GadgetContract wrong;
  wrong.push_back({"completion_equal", RequirementKind::kExistsWitness,
                   BoundaryMode::kStubs, {{"u", 1}, {"v", 1}}, {}});
  const ContractReport report = verify_gadget_contract(g, g.witness_pattern, wrong);
  CHECK_FALSE(report.all_passed);
  CHECK_FALSE(report.results[0].witness.has_value());
}

TEST_CASE("contract sweeps refuse graphs above the cap") {
  const PortedSubgraph g = make_add1_gadget(3);  // 31 nodes + 1 stub
  CHECK_THROWS_AS(verify_gadget_contract(g, g.witness_pattern, add1_gadget_contract()),
                  std::invalid_argument);
}

TEST_CASE("isolated clause equilibria project to exactly the three one-hots") {
  const PortedSubgraph g = make_clause_gadget();
  const PggInstance inst{g.graph, g.witness_pattern};
  std::set<std::string> images;
  for (const Profile& s : enumerate_ntpne(inst))
    images.insert(std::string{char('0' + s[0]), char('0' + s[1]), char('0' + s[2])});
  CHECK(images == std::set<std::string>{"100", "010", "001"});
}
