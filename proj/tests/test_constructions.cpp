#include <doctest.h>

#include <stdexcept>

#include "pgg/solve.hpp"
#include "support.hpp"

using namespace pgg;
namespace pt = pgg::testing;

TEST_CASE("hand-built path equilibria, small cases frozen") {
  CHECK(format_profile(build_path_pne(1).second) == "1");
  CHECK(format_profile(build_path_pne(2).second) == "01");
  CHECK(format_profile(build_path_pne(3).second) == "010");
  CHECK(format_profile(build_path_pne(4).second) == "1001");
  CHECK(format_profile(build_path_pne(5).second) == "01001");
  CHECK(format_profile(build_path_pne(6).second) == "010010");
  CHECK(format_profile(build_path_pne(7).second) == "1001001");
}

TEST_CASE("path equilibria verify for every length up to 300") {
  for (int n = 1; n <= 300; ++n) {
    const auto [inst, s] = build_path_pne(n);
    CHECK(inst.graph.node_count() == n);
    CHECK(inst.pattern == zero_or_two_pattern());
    CHECK(is_ntpne(inst, s));
  }
}

TEST_CASE("path equilibria survive the independent checker on small sizes") {
  for (int n = 1; n <= 12; ++n) {
    const auto [inst, s] = build_path_pne(n);
    CHECK(pt::slow_is_ntpne(inst.graph, inst.pattern, s));
  }
}

TEST_CASE("cycle equilibria are the all-ones profile") {
  for (int n = 3; n <= 300; ++n) {
    const auto [inst, s] = build_cycle_pne(n);
    CHECK(s == Profile(static_cast<size_t>(n), 1));
    CHECK(is_ntpne(inst, s));
  }
  CHECK_THROWS_AS(build_cycle_pne(2), std::invalid_argument);
}

TEST_CASE("the four-triangle chain has no pure equilibrium at all") {
  const Graph g = four_triangle_chain();
  CHECK(g.node_count() == 9);
  CHECK(g.edge_count() == 12);
  CHECK(pt::slow_all_pne(g, zero_or_two_pattern()).empty());
}
