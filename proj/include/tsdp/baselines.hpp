#pragma once

// Reference solvers that share the problem and cost model with the linear DP
// but nothing of its recursion:
//   brute_force  exhaustive enumeration of every legal state sequence
//   cop_solve    phase-stage DP in a fixed cyclic phase order, cubic in T

#include <cstdint>
#include <optional>
#include <vector>

#include "tsdp/costs.hpp"
#include "tsdp/solver.hpp"
#include "tsdp/state_space.hpp"

namespace tsdp {

struct BruteForceOptions {
  int max_horizon = 14;
};

/// Depth-first over successors in index order from each initial state in index
/// order. Among equal-cost sequences the lexicographically smallest (by state
/// index, earliest step first) is returned. op_count is the number of complete
/// legal sequences visited.
template <SeparableCost M>
SolveResult brute_force_with(const ProblemInstance& instance, const M& model,
                             const BruteForceOptions& options = {}) {
  using V = typename M::value_type;
  using Tr = detail::ValueTraits<V>;
  model.check(instance);
  const int horizon = instance.horizon();
  if (horizon > options.max_horizon)
    throw InvalidInput("brute_force: horizon " + std::to_string(horizon) + " exceeds cap " +
                       std::to_string(options.max_horizon));

  const StateGraph graph = build_graph(instance);
  const int phases = graph.phase_count();

  // cost[t-1][slot], slot = phase index or phases for none
  std::vector<V> cost(static_cast<std::size_t>(horizon) * (phases + 1));
  for (int t = 1; t <= horizon; ++t) {
    for (int q = 0; q < phases; ++q) cost[(t - 1) * (phases + 1) + q] = model.served_cost(PhaseId{q}, t, instance);
    cost[(t - 1) * (phases + 1) + phases] = model.served_cost(std::nullopt, t, instance);
  }
  std::vector<char> is_final(graph.size(), 0);
  for (int s : graph.final_states()) is_final[s] = 1;

  std::vector<int> path(horizon);
  std::vector<int> best_path;
  V best = Tr::infinity();
  std::uint64_t sequences = 0;

  auto dfs = [&](auto&& self, int depth, V running) -> void {
    const int s = path[depth];
    running += cost[static_cast<std::size_t>(depth) * (phases + 1) + graph.served_slot(s)];
    if (depth + 1 == horizon) {
      if (!is_final[s]) return;
      ++sequences;
      if (best_path.empty() || Tr::better(running, best)) {
        best = running;
        best_path = path;
      }
      return;
    }
    for (int next : graph.succs(s)) {
      path[depth + 1] = next;
      self(self, depth + 1, running);
    }
  };
  for (int s : graph.initial_states()) {
    path[0] = s;
    dfs(dfs, 0, V{});
  }
  if (best_path.empty()) throw Infeasible();

  SolveResult result;
  result.optimal_cost = static_cast<double>(best);
  result.state_sequence = std::move(best_path);
  result.op_count = sequences;
  result.plan = compress_states(result.state_sequence, graph);
  result.plan.total_cost = result.optimal_cost;
  return result;
}

SolveResult brute_force(const ProblemInstance& instance, const CostModel& model,
                        const BruteForceOptions& options = {});

/// Stages needed so that zero-duration skips can realize any phase sequence:
/// |P| · ceil(T / γ).
int cop_required_stages(const ProblemInstance& instance);

struct CopOptions {
  std::optional<int> max_stages;  // default: cop_required_stages
};

/// Phase-stage DP. Stage j serves phase (j-1) mod |P| for g ∈ {0} ∪ [γ, T]
/// steps; a non-zero stage is followed by r clearance steps unless it ends
/// exactly at T. The DP state is the time consumed so far. Green cost of a
/// stage is summed step by step as g grows. op_count counts the (stage, time,
/// duration) transitions examined, which grows as T^3.
///
/// With fewer stages than cop_required_stages the result is the best plan
/// within the budget and stage_budget_exhausted is set.
template <SeparableCost M>
SolveResult cop_solve_with(const ProblemInstance& instance, const M& model,
                           const CopOptions& options = {}) {
  using V = typename M::value_type;
  using Tr = detail::ValueTraits<V>;
  model.check(instance);

  const int horizon = instance.horizon();
  const int phases = instance.phase_count();
  const int gamma = instance.min_green();
  const int r = instance.clearance();
  const int required = cop_required_stages(instance);
  const int stages = options.max_stages.value_or(required);
  if (stages < 1) throw InvalidInput("cop_solve: max_stages must be >= 1");

  auto green_cost = [&](int phase, int t) { return static_cast<V>(model.served_cost(PhaseId{phase}, t, instance)); };
  std::vector<V> clear_cost(horizon + 1);
  for (int t = 1; t <= horizon; ++t) clear_cost[t] = model.served_cost(std::nullopt, t, instance);

  const std::size_t width = static_cast<std::size_t>(horizon) + 1;
  std::vector<V> prev(width, Tr::infinity()), curr(width);
  prev[0] = V{};
  // Duration chosen at (stage, time consumed) for the closed form, -1 if unreached.
  std::vector<std::int32_t> choice(static_cast<std::size_t>(stages + 1) * width, -1);
  choice[0] = 0;

  struct Terminal {
    int stage = -1;
    int from = 0;       // time consumed before the stage
    int duration = 0;   // 0 marks a closed terminal at (stage, T)
  } terminal;
  V best = Tr::infinity();
  std::uint64_t transitions = 0;

  // Green cost for each (phase, t) is cached per stage so the running sum
  // below reads an array instead of calling the model.
  std::vector<V> green(width);
  for (int j = 1; j <= stages; ++j) {
    const int phase = (j - 1) % phases;
    for (int t = 1; t <= horizon; ++t) green[t] = green_cost(phase, t);
    std::int32_t* row = choice.data() + static_cast<std::size_t>(j) * width;

    for (std::size_t s = 0; s < width; ++s) {
      curr[s] = prev[s];  // zero-duration skip
      row[s] = prev[s] == Tr::infinity() ? -1 : 0;
    }
    for (int from = 0; from < horizon; ++from) {
      const V base = prev[from];
      if (base == Tr::infinity()) continue;
      ++transitions;  // the skip above
      V run{};
      for (int g = 1; from + g <= horizon; ++g) {
        run += green[from + g];
        if (g < gamma) continue;
        ++transitions;
        const int end = from + g;
        if (end == horizon) {
          const V cand = base + run;
          if (Tr::better(cand, best) || terminal.stage < 0) {
            best = cand;
            terminal = {j, from, g};
          }
        } else if (end + r <= horizon) {
          V cand = base + run;
          for (int t = end + 1; t <= end + r; ++t) cand += clear_cost[t];
          const int to = end + r;
          if (row[to] < 0 || Tr::better(cand, curr[to])) {
            curr[to] = cand;
            row[to] = g;
          }
        }
      }
    }
    if (row[horizon] > 0 && (terminal.stage < 0 || Tr::better(curr[horizon], best))) {
      best = curr[horizon];
      terminal = {j, horizon, 0};
    }
    std::swap(prev, curr);
  }
  if (terminal.stage < 0) {
    if (stages < required) throw Infeasible("no feasible plan (stage budget exhausted)");
    throw Infeasible();
  }

  // Walk stages backwards collecting green entries.
  std::vector<PlanEntry> reversed;
  int j = terminal.stage;
  int s = terminal.from;
  if (terminal.duration > 0) {
    reversed.push_back(PlanEntry{PhaseId{(j - 1) % phases}, terminal.from + 1, terminal.duration});
    --j;
  }
  while (j > 0) {
    const int g = choice[static_cast<std::size_t>(j) * width + s];
    if (g > 0) {
      const int from = s - r - g;
      reversed.push_back(PlanEntry{PhaseId{(j - 1) % phases}, from + 1, g});
      s = from;
    }
    --j;
  }

  SolveResult result;
  result.plan.entries.assign(reversed.rbegin(), reversed.rend());
  result.optimal_cost = static_cast<double>(best);
  result.plan.total_cost = result.optimal_cost;
  result.state_sequence = plan_to_states(result.plan, build_graph(instance), horizon);
  result.op_count = transitions;
  result.stage_budget_exhausted = stages < required;
  return result;
}

SolveResult cop_solve(const ProblemInstance& instance, const CostModel& model,
                      const CopOptions& options = {});

}  // namespace tsdp
