#pragma once

// Shared helpers for the test suites: instance builders, random generators
// and oracles that do not go through the solvers under test.

#include <cstdint>
#include <random>
#include <vector>

#include "tsdp/model.hpp"
#include "tsdp/state_space.hpp"

namespace tsdp::testing {

inline ProblemInstance make_instance(int horizon, int phases, int clearance, int min_green,
                                     std::vector<std::vector<std::int64_t>> rows) {
  return ProblemInstance(horizon, phases, clearance, min_green, ArrivalTable(std::move(rows)));
}

inline ProblemInstance zero_instance(int horizon, int phases, int clearance, int min_green) {
  return ProblemInstance(horizon, phases, clearance, min_green, ArrivalTable(phases, horizon));
}

struct SuiteShape {
  int max_horizon = 12;
  int min_phases = 2, max_phases = 3;
  int max_min_green = 3;
  std::int64_t max_arrival = 5;
};

/// T in [γ, max_horizon], |P|, γ, r in [1, γ], arrivals uniform in [0, max_arrival].
inline ProblemInstance random_instance(std::mt19937_64& rng, const SuiteShape& shape = {}) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int phases = pick(shape.min_phases, shape.max_phases);
  const int gamma = pick(1, shape.max_min_green);
  const int r = pick(1, gamma);
  const int horizon = pick(gamma, shape.max_horizon);
  ArrivalTable table(phases, horizon);
  std::uniform_int_distribution<std::int64_t> count(0, shape.max_arrival);
  for (int p = 0; p < phases; ++p)
    for (int t = 1; t <= horizon; ++t) table.at(p, t) = count(rng);
  return ProblemInstance(horizon, phases, r, gamma, std::move(table));
}

/// Number of legal state sequences of length T: initial row vector times the
/// (T-1)-th power of the successor adjacency, summed over final states.
inline std::uint64_t count_sequences(const StateGraph& graph, int horizon) {
  const int n = graph.size();
  std::vector<std::uint64_t> ways(n, 0), next(n);
  for (int s : graph.initial_states()) ways[s] = 1;
  for (int t = 2; t <= horizon; ++t) {
    std::fill(next.begin(), next.end(), 0);
    for (int s = 0; s < n; ++s)
      for (int q : graph.preds(s)) next[s] += ways[q];
    ways.swap(next);
  }
  std::uint64_t total = 0;
  for (int s : graph.final_states()) total += ways[s];
  return total;
}

}  // namespace tsdp::testing
