#include "pgg/reductions.hpp"

#include <stdexcept>

namespace pgg {

namespace {

void check_formula(const OneInThreeFormula& f) {
  if (f.variable_count < 1) throw std::invalid_argument("formula needs variables");
  if (f.clauses.empty()) throw std::invalid_argument("formula needs at least one clause");
  for (const auto& clause : f.clauses)
    for (const Literal& lit : clause)
      if (lit.var < 0 || lit.var >= f.variable_count)
        throw std::invalid_argument("literal variable out of range");
}

bool literal_value(const Literal& lit, const std::vector<std::uint8_t>& assignment) {
  const bool v = assignment[static_cast<size_t>(lit.var)] != 0;
  return lit.negated ? !v : v;
}

}  // namespace

bool satisfies_one_in_three(const OneInThreeFormula& f,
                            const std::vector<std::uint8_t>& assignment) {
  if (static_cast<int>(assignment.size()) != f.variable_count)
    throw std::invalid_argument("assignment length does not match variable count");
  for (const auto& clause : f.clauses) {
    int trues = 0;
    for (const Literal& lit : clause) trues += literal_value(lit, assignment) ? 1 : 0;
    if (trues != 1) return false;
  }
  return true;
}

std::pair<PggInstance, LabelMap> reduce_1in3_to_pgg(const OneInThreeFormula& f) {
  check_formula(f);
  const PortedSubgraph clause_g = make_clause_gadget();
  const PortedSubgraph copy_g = make_copy_gadget();
  const PortedSubgraph negation_g = make_negation_gadget();

  LabelMap lm;
  std::vector<std::pair<int, int>> edges;
  int next = 0;
  auto stamp = [&](const PortedSubgraph& g, int instance) {
    const int off = next;
    for (auto [u, v] : g.graph.edges()) edges.emplace_back(off + u, off + v);
    for (const auto& role : g.node_roles) lm.labels.push_back({g.kind, instance, role});
    next += g.graph.node_count();
    return off;
  };

  // One clause gadget per clause; remember which literal node carries which
  // occurrence, positive and negated occurrences separately.
  std::vector<std::array<std::vector<int>, 2>> occurrences(
      static_cast<size_t>(f.variable_count));
  for (size_t c = 0; c < f.clauses.size(); ++c) {
    const int off = stamp(clause_g, static_cast<int>(c));
    lm.clause_blocks.push_back({off, {off, off + 1, off + 2}});
    for (int slot = 0; slot < 3; ++slot) {
      const Literal& lit = f.clauses[c][static_cast<size_t>(slot)];
      occurrences[static_cast<size_t>(lit.var)][lit.negated ? 1 : 0].push_back(off + slot);
    }
  }

  // Chain equal-polarity occurrences through copy gadgets, in order.
  const int u_hook = copy_g.ports.at("u_hook");
  const int v_hook = copy_g.ports.at("v_hook");
  int copy_instance = 0;
  for (const auto& polarities : occurrences) {
    for (const auto& occ : polarities) {
      for (size_t i = 0; i + 1 < occ.size(); ++i) {
        const int off = stamp(copy_g, copy_instance++);
        edges.emplace_back(occ[i], off + u_hook);
        edges.emplace_back(occ[i + 1], off + v_hook);
        lm.copy_links.push_back({off, occ[i], occ[i + 1]});
      }
    }
  }

  // One negation gadget per variable seen in both polarities, joining the
  // two chain ends (keeping every literal node's degree at most 6).
  const int hook = negation_g.ports.at("hook");
  int negation_instance = 0;
  for (const auto& polarities : occurrences) {
    if (polarities[0].empty() || polarities[1].empty()) continue;
    const int off = stamp(negation_g, negation_instance++);
    edges.emplace_back(polarities[0].back(), off + hook);
    edges.emplace_back(polarities[1].back(), off + hook);
    lm.negation_links.push_back({off, polarities[0].back(), polarities[1].back()});
  }

  PggInstance inst{Graph(next, edges), zero_or_two_pattern()};
  return {std::move(inst), std::move(lm)};
}

std::vector<std::uint8_t> extract_assignment(const PggInstance& inst,
                                             const OneInThreeFormula& f,
                                             const LabelMap& lm, const Profile& s) {
  if (!is_ntpne(inst, s))
    throw std::invalid_argument("profile is not a non-trivial equilibrium");
  std::vector<std::uint8_t> assignment(static_cast<size_t>(f.variable_count), 0);
  std::vector<bool> defined(static_cast<size_t>(f.variable_count), false);
  for (size_t c = 0; c < f.clauses.size(); ++c) {
    for (int slot = 0; slot < 3; ++slot) {
      const Literal& lit = f.clauses[c][static_cast<size_t>(slot)];
      if (defined[static_cast<size_t>(lit.var)]) continue;
      const std::uint8_t node_value =
          s[static_cast<size_t>(lm.clause_blocks[c].literal_nodes[static_cast<size_t>(slot)])];
      assignment[static_cast<size_t>(lit.var)] =
          lit.negated ? static_cast<std::uint8_t>(1 - node_value) : node_value;
      defined[static_cast<size_t>(lit.var)] = true;
    }
  }
  if (!satisfies_one_in_three(f, assignment))
    throw std::logic_error("equilibrium does not decode to a one-in-three assignment");
  return assignment;
}

Profile lift_assignment(const PggInstance& inst, const OneInThreeFormula& f,
                        const LabelMap& lm,
                        const std::vector<std::uint8_t>& assignment) {
  if (!satisfies_one_in_three(f, assignment))
    throw std::invalid_argument("assignment is not one-in-three");
  const PortedSubgraph clause_g = make_clause_gadget();
  const PortedSubgraph copy_g = make_copy_gadget();
  const PortedSubgraph negation_g = make_negation_gadget();
  Profile s(static_cast<size_t>(inst.graph.node_count()), 0);
  auto paste = [&](const PortedSubgraph& g, int off,
                   const std::map<std::string, int>& boundary) {
    const WitnessEntry* w = g.find_witness(boundary);
    if (w == nullptr)
      throw std::logic_error("no witness for a " + g.kind + " gadget boundary");
    for (int i = 0; i < g.graph.node_count(); ++i)
      s[static_cast<size_t>(off + i)] = w->assignment[static_cast<size_t>(i)];
  };
  for (size_t c = 0; c < f.clauses.size(); ++c) {
    std::map<std::string, int> boundary;
    for (int slot = 0; slot < 3; ++slot)
      boundary["l" + std::to_string(slot + 1)] =
          literal_value(f.clauses[c][static_cast<size_t>(slot)], assignment) ? 1 : 0;
    paste(clause_g, lm.clause_blocks[c].offset, boundary);
  }
  for (const GadgetLink& link : lm.copy_links) {
    const int uv = s[static_cast<size_t>(link.u_node)];
    paste(copy_g, link.offset, {{"u", uv}, {"v", uv}});
  }
  for (const GadgetLink& link : lm.negation_links) {
    paste(negation_g, link.offset,
          {{"u", s[static_cast<size_t>(link.u_node)]},
           {"v", s[static_cast<size_t>(link.v_node)]}});
  }
  if (!is_ntpne(inst, s))
    throw std::logic_error("lifted assignment is not a non-trivial equilibrium");
  return s;
}

Graph double_graph(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(4 * g.edge_count()));
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(n + u, n + v);
    edges.emplace_back(u, n + v);
    edges.emplace_back(v, n + u);
  }
  return Graph(2 * n, edges);
}

std::vector<Graph> shift_family(const Graph& g, int m) {
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("shift family needs a nonempty graph");
  const PortedSubgraph add1 = make_add1_gadget(m);
  const PortedSubgraph force1 = make_force1_gadget(m);
  const int bridge = add1.ports.at("b");
  const int antenna = force1.ports.at("a");
  std::vector<Graph> family;
  family.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<std::pair<int, int>> edges = g.edges();
    int next = n;
    for (int i = 0; i < n; ++i) {
      for (auto [u, v] : add1.graph.edges()) edges.emplace_back(next + u, next + v);
      edges.emplace_back(i, next + bridge);
      next += add1.graph.node_count();
    }
    for (auto [u, v] : force1.graph.edges()) edges.emplace_back(next + u, next + v);
    edges.emplace_back(j, next + antenna);
    next += force1.graph.node_count();
    family.push_back(Graph(next, edges));
  }
  return family;
}

}  // namespace pgg
