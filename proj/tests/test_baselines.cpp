#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tsdp/baselines.hpp"
#include "tsdp/solver.hpp"

using namespace tsdp;

TEST_CASE("brute force: zero arrivals cost nothing") {
  const auto inst = testing::zero_instance(9, 3, 2, 3);
  CHECK(brute_force(inst, StopsCost{}).optimal_cost == 0.0);
  CHECK(solve(inst, StopsCost{}).optimal_cost == 0.0);
}

TEST_CASE("brute force: T = gamma leaves one sequence per phase") {
  for (int phases = 2; phases <= 4; ++phases) {
    ArrivalTable a(phases, 4);
    for (int p = 0; p < phases; ++p)
      for (int t = 1; t <= 4; ++t) a.at(p, t) = p + t;
    const ProblemInstance inst(4, phases, 2, 4, a);
    const auto r = brute_force(inst, StopsCost{});
    CHECK(r.op_count == static_cast<std::uint64_t>(phases));
    REQUIRE(r.plan.entries.size() == 1);
    CHECK(r.plan.entries[0].phase == PhaseId{phases - 1});  // busiest phase served
    CHECK(r.optimal_cost == solve(inst, StopsCost{}).optimal_cost);
  }
}

TEST_CASE("brute force enumerates exactly the sequences counted by adjacency powers") {
  for (int phases = 2; phases <= 3; ++phases)
    for (int gamma = 1; gamma <= 3; ++gamma)
      for (int r = 1; r <= gamma; ++r)
        for (int horizon = gamma; horizon <= 12; ++horizon) {
          const auto inst = testing::zero_instance(horizon, phases, r, gamma);
          CAPTURE(phases);
          CAPTURE(gamma);
          CAPTURE(r);
          CAPTURE(horizon);
          CHECK(brute_force(inst, StopsCost{}).op_count ==
                testing::count_sequences(build_graph(inst), horizon));
        }
}

TEST_CASE("brute force: lexicographically smallest sequence among ties") {
  // All-zero arrivals, r = γ = 1: the smallest sequence alternates A and
  // the clearance state and ends in clearance.
  const auto inst = testing::zero_instance(4, 3, 1, 1);
  const auto r = brute_force(inst, StopsCost{});
  CHECK(r.state_labels(build_graph(inst)) == std::vector<std::string>{"A", "0", "A", "0"});
}

TEST_CASE("brute force refuses horizons over the cap") {
  const auto inst = testing::zero_instance(15, 2, 1, 1);
  CHECK_THROWS_AS(brute_force(inst, StopsCost{}), InvalidInput);
  CHECK_NOTHROW(brute_force(inst, StopsCost{}, {.max_horizon = 15}));
}

TEST_CASE("cop: stage budget and zero arrivals") {
  const auto inst = testing::zero_instance(10, 3, 1, 2);
  CHECK(cop_required_stages(inst) == 15);
  const auto r = cop_solve(inst, StopsCost{});
  CHECK(r.optimal_cost == 0.0);
  CHECK_FALSE(r.stage_budget_exhausted);
  CHECK(validate_plan(r.plan, inst).ok());
}

TEST_CASE("cop: reverse phase order is reached through zero-length stages") {
  // Only C, then B, then A carry traffic; the zero-cost plan is
  // C:2 | B:2 | A:2 which the cyclic order A,B,C reaches as
  // A0 B0 C2 A0 B2 C0 A2.
  const auto inst = testing::make_instance(
      8, 3, 1, 2, {{0, 0, 0, 0, 0, 0, 5, 5}, {0, 0, 0, 5, 5, 0, 0, 0}, {5, 5, 0, 0, 0, 0, 0, 0}});
  const auto oracle = brute_force(inst, StopsCost{});
  CHECK(oracle.optimal_cost == 0.0);
  const auto cop = cop_solve(inst, StopsCost{});
  CHECK(cop.optimal_cost == 0.0);
  REQUIRE(cop.plan.entries.size() == 3);
  CHECK(cop.plan.entries[0] == PlanEntry{PhaseId{2}, 1, 2});
  CHECK(cop.plan.entries[1] == PlanEntry{PhaseId{1}, 4, 2});
  CHECK(cop.plan.entries[2] == PlanEntry{PhaseId{0}, 7, 2});

  // Seven stages suffice; three cannot reach C, B, A.
  CHECK(cop_solve(inst, StopsCost{}, {.max_stages = 7}).optimal_cost == 0.0);
  const auto short_budget = cop_solve(inst, StopsCost{}, {.max_stages = 3});
  CHECK(short_budget.stage_budget_exhausted);
  CHECK(short_budget.optimal_cost > 0.0);
  CHECK(validate_plan(short_budget.plan, inst).ok());
}

TEST_CASE("three-way equivalence on random small instances") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = testing::random_instance(rng);
    const auto oracle = brute_force(inst, StopsCost{});
    const auto dp = solve(inst, StopsCost{});
    const auto cop = cop_solve(inst, StopsCost{});
    CAPTURE(trial);
    CHECK(cop.optimal_cost == oracle.optimal_cost);
    CHECK(dp.optimal_cost == oracle.optimal_cost);
    CHECK(validate_plan(cop.plan, inst).ok());
    CHECK(validate_plan(oracle.plan, inst).ok());
    const StateGraph g = build_graph(inst);
    CHECK(sequence_cost(StopsCost{}, cop.state_sequence, g, inst) == cop.optimal_cost);
    CHECK(sequence_cost(StopsCost{}, oracle.state_sequence, g, inst) == oracle.optimal_cost);
  }
}

TEST_CASE("cop agrees with the linear DP on longer horizons") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = testing::random_instance(rng, {.max_horizon = 60, .max_phases = 4, .max_min_green = 4});
    CHECK(cop_solve(inst, StopsCost{}).optimal_cost == solve(inst, StopsCost{}).optimal_cost);
  }
}

TEST_CASE("cop transition count grows cubically") {
  auto count = [](int horizon) {
    return cop_solve(testing::zero_instance(horizon, 3, 2, 3), StopsCost{}).op_count;
  };
  for (int horizon : {64, 128}) {
    const double ratio = static_cast<double>(count(2 * horizon)) / static_cast<double>(count(horizon));
    CAPTURE(horizon);
    CHECK(ratio >= 6.0);
    CHECK(ratio <= 8.5);
  }
}
