#include <doctest.h>

#include <stdexcept>

#include "pgg/solve.hpp"
#include "pgg/util.hpp"
#include "support.hpp"

using namespace pgg;
namespace pt = pgg::testing;

TEST_CASE("two mutually supportive nodes settle in two flips") {
  // pattern 1,1: produce regardless of up to one productive neighbor
  const PggInstance inst{make_path(2), Pattern::parse("11")};
  const DynamicsTrace trace =
      br_dynamics(inst, parse_profile("00"), Schedule::kRoundRobin, 100);
  CHECK(trace.terminal == DynamicsTerminal::kFixpoint);
  CHECK(format_profile(trace.final_profile) == "11");
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].node == 0);
  CHECK(trace.steps[1].node == 1);
  CHECK(trace.steps[0].profile_hash == profile_hash(parse_profile("10")));
  CHECK(trace.steps[1].profile_hash == profile_hash(parse_profile("11")));
}

TEST_CASE("a start that is already an equilibrium ends immediately") {
  const PggInstance inst{make_path(5), zero_or_two_pattern()};
  const DynamicsTrace trace =
      br_dynamics(inst, parse_profile("01001"), Schedule::kRoundRobin, 0);
  CHECK(trace.terminal == DynamicsTerminal::kFixpoint);
  CHECK(trace.steps.empty());
}

TEST_CASE("the step cap cuts an unfinished run") {
  const PggInstance inst{make_path(2), Pattern::parse("11")};
  const DynamicsTrace trace =
      br_dynamics(inst, parse_profile("00"), Schedule::kRoundRobin, 1);
  CHECK(trace.terminal == DynamicsTerminal::kCapReached);
  CHECK(trace.steps.size() == 1);
}

TEST_CASE("a graph without equilibria never reaches a fixpoint") {
  const PggInstance inst{four_triangle_chain(), zero_or_two_pattern()};
  SplitMix64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    Profile start(9, 0);
    for (auto& v : start) v = static_cast<std::uint8_t>(rng.below(2));
    for (const Schedule schedule : {Schedule::kRoundRobin, Schedule::kLowestDeviator}) {
      const DynamicsTrace trace = br_dynamics(inst, start, schedule, 5000);
      CHECK(trace.terminal != DynamicsTerminal::kFixpoint);
    }
  }
}

TEST_CASE("deterministic schedules on a finite space end in a cycle") {
  const PggInstance inst{four_triangle_chain(), zero_or_two_pattern()};
  const DynamicsTrace trace =
      br_dynamics(inst, Profile(9, 0), Schedule::kLowestDeviator, 100000);
  CHECK(trace.terminal == DynamicsTerminal::kCycle);
}

TEST_CASE("decreasing patterns drive round-robin dynamics to an equilibrium") {
  SplitMix64 rng(52);
  for (const char* text : {"1", "11", "111"}) {
    const Pattern t = Pattern::parse(text);
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(11));
      const PggInstance inst{random_graph(rng, n, 30), t};
      Profile start(static_cast<size_t>(n), 0);
      for (auto& v : start) v = static_cast<std::uint8_t>(rng.below(2));
      const DynamicsTrace trace =
          br_dynamics(inst, start, Schedule::kRoundRobin, 100000);
      REQUIRE(trace.terminal == DynamicsTerminal::kFixpoint);
      CHECK(pt::slow_is_ntpne(inst.graph, inst.pattern, trace.final_profile));
    }
  }
}

TEST_CASE("fixpoints of the dynamics are exactly equilibria") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const PggInstance inst{random_graph(rng, n, 45), random_pattern(rng, 4)};
    Profile start(static_cast<size_t>(n), 0);
    for (auto& v : start) v = static_cast<std::uint8_t>(rng.below(2));
    const DynamicsTrace trace = br_dynamics(inst, start, Schedule::kLowestDeviator, 3000);
    if (trace.terminal == DynamicsTerminal::kFixpoint)
      CHECK(pt::slow_is_pne(inst.graph, inst.pattern, trace.final_profile));
    else
      CHECK_FALSE(pt::slow_is_pne(inst.graph, inst.pattern, trace.final_profile));
  }
}

TEST_CASE("profile hashing tells close profiles apart") {
  CHECK(profile_hash(parse_profile("00")) != profile_hash(parse_profile("01")));
  CHECK(profile_hash(parse_profile("01")) != profile_hash(parse_profile("10")));
  CHECK(profile_hash(parse_profile("1")) != profile_hash(parse_profile("10")));
  CHECK(profile_hash(parse_profile("0110")) == profile_hash(parse_profile("0110")));
}

TEST_CASE("dynamics validates the start profile length") {
  const PggInstance inst{make_path(3), best_shot_pattern()};
  CHECK_THROWS_AS(br_dynamics(inst, parse_profile("01"), Schedule::kRoundRobin, 10),
                  std::invalid_argument);
}
