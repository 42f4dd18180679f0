#include "pgg/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgg {

namespace {

// Gadget nodes first, then one stub node per boundary entry, each wired to
// its declared port.
Graph extend_with_stubs(const PortedSubgraph& g) {
  auto edges = g.graph.edges();
  int next = g.graph.node_count();
  for (const auto& [stub, port] : g.boundary) edges.emplace_back(next++, g.ports.at(port));
  return Graph(next, edges);
}

// Reject a builder result unless every witness entry leaves all gadget nodes
// playing best response once the boundary is set as the entry says.
void validate_witness_table(const PortedSubgraph& g) {
  const int n = g.graph.node_count();
  const Graph ext = extend_with_stubs(g);
  for (const auto& entry : g.witness_table) {
    if (static_cast<int>(entry.assignment.size()) != n)
      throw std::logic_error(g.kind + " witness has wrong assignment length");
    Profile full(static_cast<size_t>(ext.node_count()), 0);
    std::copy(entry.assignment.begin(), entry.assignment.end(), full.begin());
    int stub_id = n;
    for (const auto& [stub, port] : g.boundary) {
      auto it = entry.boundary.find(stub);
      if (it == entry.boundary.end())
        throw std::logic_error(g.kind + " witness misses a value for stub " + stub);
      full[static_cast<size_t>(stub_id++)] = static_cast<std::uint8_t>(it->second);
    }
    for (const auto& [name, val] : entry.boundary) {
      auto pit = g.ports.find(name);
      if (pit != g.ports.end() &&
          entry.assignment[static_cast<size_t>(pit->second)] != val)
        throw std::logic_error(g.kind + " witness disagrees with its port value " + name);
    }
    for (int i = 0; i < n; ++i) {
      const int k = productive_neighbors(ext, full, i);
      if (full[static_cast<size_t>(i)] != g.witness_pattern.query(k))
        throw std::logic_error(g.kind + " witness rejected: node " + g.node_roles[static_cast<size_t>(i)] +
                               " is not playing best response");
    }
  }
}

void append_negation_edges(std::vector<std::pair<int, int>>& edges, int off) {
  for (int i = 0; i < 4; ++i) edges.emplace_back(off + i, off + i + 1);
  for (int i = 1; i <= 4; ++i) {
    edges.emplace_back(off + 4 + i, off + i - 1);
    edges.emplace_back(off + 4 + i, off + i);
  }
}

const std::vector<std::string>& negation_roles() {
  static const std::vector<std::string> roles{"b1", "b2", "b3", "b4", "b5",
                                              "t1", "t2", "t3", "t4"};
  return roles;
}

}  // namespace

const WitnessEntry* PortedSubgraph::find_witness(
    const std::map<std::string, int>& wanted) const {
  for (const auto& entry : witness_table)
    if (entry.boundary == wanted) return &entry;
  return nullptr;
}

PortedSubgraph make_clause_gadget() {
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::string> roles{"l1", "l2", "l3"};
  for (int i = 0; i < 3; ++i) {
    const int l = i;
    const int base = 3 + 6 * i;
    const int x = base, y = base + 1, a = base + 2, b = base + 3, c = base + 4, d = base + 5;
    // Three stacked triangles: the literal with x,y, then x with a,b and
    // y with c,d.
    const std::pair<int, int> sub[] = {{l, x}, {l, y}, {x, y}, {x, a}, {x, b},
                                       {a, b}, {y, c}, {y, d}, {c, d}};
    edges.insert(edges.end(), std::begin(sub), std::end(sub));
    const std::string sfx = std::to_string(i + 1);
    for (const char* base_name : {"x", "y", "a", "b", "c", "d"})
      roles.push_back(base_name + sfx);
  }
  PortedSubgraph g;
  g.kind = "clause";
  g.graph = Graph(21, edges);
  g.ports = {{"l1", 0}, {"l2", 1}, {"l3", 2}};
  g.node_roles = std::move(roles);
  g.witness_pattern = zero_or_two_pattern();
  for (int on = 0; on < 3; ++on) {
    Profile s(21, 0);
    s[static_cast<size_t>(on)] = 1;
    for (int i = 0; i < 3; ++i) {
      const int base = 3 + 6 * i;
      if (i == on) {
        // The live literal's companions both play.
        s[static_cast<size_t>(base)] = 1;
        s[static_cast<size_t>(base) + 1] = 1;
      } else {
        // Silent branch: x,y stay 0, each outer triangle splits 1/0.
        s[static_cast<size_t>(base) + 2] = 1;
        s[static_cast<size_t>(base) + 4] = 1;
      }
    }
    WitnessEntry e;
    e.boundary = {{"l1", on == 0 ? 1 : 0}, {"l2", on == 1 ? 1 : 0}, {"l3", on == 2 ? 1 : 0}};
    e.assignment = std::move(s);
    g.witness_table.push_back(std::move(e));
  }
  validate_witness_table(g);
  return g;
}

PortedSubgraph make_negation_gadget() {
  std::vector<std::pair<int, int>> edges;
  append_negation_edges(edges, 0);
  PortedSubgraph g;
  g.kind = "negation";
  g.graph = Graph(9, edges);
  g.ports = {{"hook", 6}};  // t2
  g.boundary = {{"u", "hook"}, {"v", "hook"}};
  g.node_roles = negation_roles();
  g.witness_pattern = zero_or_two_pattern();
  Profile s(9, 0);
  s[3] = 1;  // b4
  s[5] = 1;  // t1
  g.witness_table.push_back({{{"u", 0}, {"v", 1}}, s});
  g.witness_table.push_back({{{"u", 1}, {"v", 0}}, s});
  validate_witness_table(g);
  return g;
}

PortedSubgraph make_copy_gadget() {
  std::vector<std::pair<int, int>> edges;
  append_negation_edges(edges, 0);
  append_negation_edges(edges, 9);
  const int x = 18, y = 19;
  edges.emplace_back(x, y);
  edges.emplace_back(6, x);   // first hook joins u and x
  edges.emplace_back(15, x);  // second hook joins v and x
  PortedSubgraph g;
  g.kind = "copy";
  g.graph = Graph(20, edges);
  g.ports = {{"u_hook", 6}, {"v_hook", 15}};
  g.boundary = {{"u", "u_hook"}, {"v", "v_hook"}};
  for (const char* prefix : {"ng1_", "ng2_"})
    for (const auto& r : negation_roles()) g.node_roles.push_back(prefix + r);
  g.node_roles.push_back("x");
  g.node_roles.push_back("y");
  g.witness_pattern = zero_or_two_pattern();
  Profile base(20, 0);
  base[3] = base[5] = 1;    // first inner gadget: b4, t1
  base[12] = base[14] = 1;  // second inner gadget: b4, t1
  Profile off = base;
  off[x] = 1;  // u=v=0: x carries the hooks' productive neighbor
  Profile on = base;
  on[y] = 1;  // u=v=1: x hears u through each hook, y backs x off
  g.witness_table.push_back({{{"u", 0}, {"v", 0}}, std::move(off)});
  g.witness_table.push_back({{{"u", 1}, {"v", 1}}, std::move(on)});
  validate_witness_table(g);
  return g;
}

PortedSubgraph make_force1_gadget(int m) {
  if (m < 1) throw std::invalid_argument("force1 gadget needs m >= 1");
  const int n = 6 * m + 4;
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
  PortedSubgraph g;
  g.kind = "force1";
  g.node_roles = {"x", "y", "z"};
  // x gets 2m+1 antennas (the first one, "a", is the port); y and z get 2m.
  for (int k = 0; k <= 2 * m; ++k) {
    edges.emplace_back(0, 3 + k);
    g.node_roles.push_back(k == 0 ? "a" : "xa" + std::to_string(k + 1));
  }
  for (int k = 0; k < 2 * m; ++k) {
    edges.emplace_back(1, 4 + 2 * m + k);
    g.node_roles.push_back("ya" + std::to_string(k + 1));
  }
  for (int k = 0; k < 2 * m; ++k) {
    edges.emplace_back(2, 4 + 4 * m + k);
    g.node_roles.push_back("za" + std::to_string(k + 1));
  }
  g.graph = Graph(n, edges);
  g.ports = {{"a", 3}};
  g.boundary = {{"u", "a"}};
  g.witness_pattern = isolated_odd_pattern(m);
  Profile s(static_cast<size_t>(n), 1);
  s[0] = s[1] = s[2] = s[3] = 0;  // triangle silent, a silent, antennas on
  g.witness_table.push_back({{{"u", 1}}, std::move(s)});
  validate_witness_table(g);
  return g;
}

PortedSubgraph make_add1_gadget(int m) {
  if (m < 1) throw std::invalid_argument("add1 gadget needs m >= 1");
  // x_i occupies i-1, y_i occupies m+i, then the bridge, then a force1
  // block keeping the bridge productive.
  const auto xn = [](int i) { return i - 1; };
  const auto yn = [m](int i) { return m + i; };
  const int bridge = 2 * m + 2;
  const int fg_off = 2 * m + 3;
  PortedSubgraph fg = make_force1_gadget(m);
  std::vector<std::pair<int, int>> edges;
  // x_1 and y_1 see every other clique node.
  for (int id = 1; id <= 2 * m + 1; ++id) edges.emplace_back(xn(1), id);
  for (int i = 2; i <= m + 1; ++i) {
    edges.emplace_back(yn(1), xn(i));
    edges.emplace_back(yn(1), yn(i));
  }
  // The rest is a clique missing every x_i,y_i diagonal (i >= 2).
  for (int i = 2; i <= m + 1; ++i) {
    for (int j = i + 1; j <= m + 1; ++j) {
      edges.emplace_back(xn(i), xn(j));
      edges.emplace_back(yn(i), yn(j));
    }
    for (int j = 2; j <= m + 1; ++j)
      if (j != i) edges.emplace_back(xn(i), yn(j));
  }
  for (int i = 2; i <= m + 1; ++i) {
    edges.emplace_back(bridge, xn(i));
    edges.emplace_back(bridge, yn(i));
  }
  for (auto [u, v] : fg.graph.edges()) edges.emplace_back(fg_off + u, fg_off + v);
  edges.emplace_back(bridge, fg_off + fg.ports.at("a"));
  PortedSubgraph g;
  g.kind = "add1";
  g.graph = Graph(8 * m + 7, edges);
  g.ports = {{"b", bridge}};
  g.boundary = {{"v", "b"}};
  for (int i = 1; i <= m + 1; ++i) g.node_roles.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m + 1; ++i) g.node_roles.push_back("y" + std::to_string(i));
  g.node_roles.push_back("b");
  for (const auto& r : fg.node_roles) g.node_roles.push_back("fg_" + r);
  g.witness_pattern = isolated_odd_pattern(m);
  Profile quiet(static_cast<size_t>(8 * m + 7), 0);
  quiet[static_cast<size_t>(bridge)] = 1;
  const WitnessEntry& fgw = fg.witness_table.front();
  for (int k = 0; k < fg.graph.node_count(); ++k)
    quiet[static_cast<size_t>(fg_off + k)] = fgw.assignment[static_cast<size_t>(k)];
  Profile loud = quiet;
  // v silent: only x_1 plays in the clique. v productive: everyone does.
  quiet[static_cast<size_t>(xn(1))] = 1;
  for (int id = 0; id <= 2 * m + 1; ++id) loud[static_cast<size_t>(id)] = 1;
  g.witness_table.push_back({{{"v", 0}}, std::move(quiet)});
  g.witness_table.push_back({{{"v", 1}}, std::move(loud)});
  validate_witness_table(g);
  return g;
}

PortedSubgraph make_gadget(const std::string& kind, int m) {
  if (kind == "clause") return make_clause_gadget();
  if (kind == "negation") return make_negation_gadget();
  if (kind == "copy") return make_copy_gadget();
  if (kind == "force1") return make_force1_gadget(m);
  if (kind == "add1") return make_add1_gadget(m);
  throw std::invalid_argument("unknown gadget kind: " + kind);
}

int ContractContext::value(const std::string& name) const {
  auto it = names->find(name);
  if (it == names->end()) throw std::invalid_argument("unknown interface name: " + name);
  return (*profile)[static_cast<size_t>(it->second)];
}

GadgetContract clause_gadget_contract() {
  GadgetContract c;
  c.push_back({"literal_on_forces_companions_on", RequirementKind::kForallPne,
               BoundaryMode::kFreeOutside, {},
               [](const ContractContext& ctx) {
                 for (int i = 1; i <= 3; ++i) {
                   const std::string sfx = std::to_string(i);
                   if (ctx.value("l" + sfx) == 1 &&
                       (ctx.value("x" + sfx) != 1 || ctx.value("y" + sfx) != 1))
                     return false;
                 }
                 return true;
               }});
  c.push_back({"at_most_one_literal_on", RequirementKind::kForallPne,
               BoundaryMode::kFreeOutside, {},
               [](const ContractContext& ctx) {
                 return ctx.value("l1") + ctx.value("l2") + ctx.value("l3") <= 1;
               }});
  c.push_back({"isolated_ports_not_all_zero", RequirementKind::kForallPne,
               BoundaryMode::kIsolated, {},
               [](const ContractContext& ctx) {
                 return ctx.value("l1") + ctx.value("l2") + ctx.value("l3") >= 1;
               }});
  c.push_back({"isolated_ports_exactly_one_on", RequirementKind::kForallPne,
               BoundaryMode::kIsolated, {},
               [](const ContractContext& ctx) {
                 return ctx.value("l1") + ctx.value("l2") + ctx.value("l3") == 1;
               }});
  for (int i = 1; i <= 3; ++i) {
    std::map<std::string, int> pins{{"l1", i == 1 ? 1 : 0},
                                    {"l2", i == 2 ? 1 : 0},
                                    {"l3", i == 3 ? 1 : 0}};
    c.push_back({"one_hot_completion_l" + std::to_string(i),
                 RequirementKind::kExistsWitness, BoundaryMode::kIsolated,
                 std::move(pins), {}});
  }
  return c;
}

GadgetContract negation_gadget_contract() {
  GadgetContract c;
  c.push_back({"inputs_forced_opposite", RequirementKind::kForallPne,
               BoundaryMode::kStubs, {},
               [](const ContractContext& ctx) { return ctx.value("u") != ctx.value("v"); }});
  c.push_back({"hook_forced_silent", RequirementKind::kForallPne, BoundaryMode::kStubs, {},
               [](const ContractContext& ctx) { return ctx.value("hook") == 0; }});
  c.push_back({"completion_u0_v1", RequirementKind::kExistsWitness, BoundaryMode::kStubs,
               {{"u", 0}, {"v", 1}}, {}});
  c.push_back({"completion_u1_v0", RequirementKind::kExistsWitness, BoundaryMode::kStubs,
               {{"u", 1}, {"v", 0}}, {}});
  return c;
}

GadgetContract copy_gadget_contract() {
  GadgetContract c;
  c.push_back({"inputs_forced_equal", RequirementKind::kForallPne, BoundaryMode::kStubs, {},
               [](const ContractContext& ctx) { return ctx.value("u") == ctx.value("v"); }});
  c.push_back({"hooks_forced_silent", RequirementKind::kForallPne, BoundaryMode::kStubs, {},
               [](const ContractContext& ctx) {
                 return ctx.value("u_hook") == 0 && ctx.value("v_hook") == 0;
               }});
  c.push_back({"completion_equal_zero", RequirementKind::kExistsWitness,
               BoundaryMode::kStubs, {{"u", 0}, {"v", 0}}, {}});
  c.push_back({"completion_equal_one", RequirementKind::kExistsWitness,
               BoundaryMode::kStubs, {{"u", 1}, {"v", 1}}, {}});
  return c;
}

GadgetContract force1_gadget_contract() {
  GadgetContract c;
  c.push_back({"input_forced_on", RequirementKind::kForallPne, BoundaryMode::kStubs, {},
               [](const ContractContext& ctx) { return ctx.value("u") == 1; }});
  c.push_back({"antenna_forced_silent", RequirementKind::kForallPne, BoundaryMode::kStubs, {},
               [](const ContractContext& ctx) { return ctx.value("a") == 0; }});
  c.push_back({"completion_input_on", RequirementKind::kExistsWitness, BoundaryMode::kStubs,
               {{"u", 1}}, {}});
  return c;
}

GadgetContract add1_gadget_contract() {
  GadgetContract c;
  c.push_back({"bridge_forced_on", RequirementKind::kForallPne, BoundaryMode::kStubs, {},
               [](const ContractContext& ctx) { return ctx.value("b") == 1; }});
  c.push_back({"completion_v_zero", RequirementKind::kExistsWitness, BoundaryMode::kStubs,
               {{"v", 0}}, {}});
  c.push_back({"completion_v_one", RequirementKind::kExistsWitness, BoundaryMode::kStubs,
               {{"v", 1}}, {}});
  return c;
}

GadgetContract contract_for(const std::string& kind) {
  if (kind == "clause") return clause_gadget_contract();
  if (kind == "negation") return negation_gadget_contract();
  if (kind == "copy") return copy_gadget_contract();
  if (kind == "force1") return force1_gadget_contract();
  if (kind == "add1") return add1_gadget_contract();
  throw std::invalid_argument("unknown gadget kind: " + kind);
}

ContractReport verify_gadget_contract(const PortedSubgraph& g, const Pattern& t,
                                      const GadgetContract& contract, int cap) {
  ContractReport report;
  report.all_passed = true;
  for (const Requirement& req : contract) {
    const int n = g.graph.node_count();
    Graph graph = g.graph;
    std::vector<NodeRole> roles(static_cast<size_t>(n), NodeRole::kConstrained);
    // Role names, port names and (in stub mode) stub names address nodes in
    // pins and predicates. Builders keep these three name sets disjoint
    // except where a port deliberately aliases its own role.
    std::map<std::string, int> names;
    for (int i = 0; i < n; ++i) names[g.node_roles[static_cast<size_t>(i)]] = i;
    for (const auto& [port, id] : g.ports) names[port] = id;
    if (req.mode == BoundaryMode::kStubs) {
      graph = extend_with_stubs(g);
      roles.resize(static_cast<size_t>(graph.node_count()), NodeRole::kFreeInput);
      int stub_id = n;
      for (const auto& [stub, port] : g.boundary) names[stub] = stub_id++;
    } else if (req.mode == BoundaryMode::kFreeOutside) {
      for (const auto& [port, id] : g.ports)
        roles[static_cast<size_t>(id)] = NodeRole::kPortFreeOutside;
    }
    if (graph.node_count() > cap)
      throw std::invalid_argument("contract sweep for " + g.kind + " needs " +
                                  std::to_string(graph.node_count()) +
                                  " nodes, above the cap of " + std::to_string(cap));
    std::vector<std::int8_t> pins(static_cast<size_t>(graph.node_count()), -1);
    for (const auto& [name, val] : req.pins) {
      auto it = names.find(name);
      if (it == names.end())
        throw std::invalid_argument("pin addresses unknown name: " + name);
      pins[static_cast<size_t>(it->second)] = static_cast<std::int8_t>(val);
    }
    RequirementResult res;
    res.name = req.name;
    ContractContext ctx;
    ctx.names = &names;
    if (req.kind == RequirementKind::kForallPne) {
      res.passed = true;
      for_each_consistent(graph, t, roles, pins, [&](const Profile& s) {
        ++res.configs;
        ctx.profile = &s;
        if (req.predicate && !req.predicate(ctx)) {
          res.passed = false;
          res.counterexample = s;
          return false;
        }
        return true;
      });
    } else {
      res.passed = false;
      for_each_consistent(graph, t, roles, pins, [&](const Profile& s) {
        ++res.configs;
        ctx.profile = &s;
        if (!req.predicate || req.predicate(ctx)) {
          res.passed = true;
          res.witness = s;
          return false;
        }
        return true;
      });
    }
    report.all_passed = report.all_passed && res.passed;
    report.results.push_back(std::move(res));
  }
  return report;
}

}  // namespace pgg
