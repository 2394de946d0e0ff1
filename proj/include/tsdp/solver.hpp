#pragma once

// Time-staged dynamic program over the signal state graph.
//
// Stage t holds one value per state: the cheapest cost of any legal state
// sequence of length t ending in that state. Each stage reads only the
// previous one, so two value rows are live; the predecessor matrix
// (T x states) is kept for trace-back. Work per stage is one relaxation per
// graph edge, so a solve is O((γ|P|+r)·T) relaxations plus O(|P|^2·T) cost
// evaluations.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tsdp/costs.hpp"
#include "tsdp/model.hpp"
#include "tsdp/state_space.hpp"

namespace tsdp {

class Infeasible : public std::runtime_error {
 public:
  Infeasible() : std::runtime_error("no feasible plan") {}
  using std::runtime_error::runtime_error;
};

struct SolveResult {
  TimingPlan plan;
  double optimal_cost = 0.0;
  std::vector<int> state_sequence;  // state index per step, index t-1 holds step t
  std::uint64_t op_count = 0;       // relaxations / transitions / sequences, per algorithm
  bool stage_budget_exhausted = false;

  std::vector<std::string> state_labels(const StateGraph& graph) const;
};

namespace detail {

template <class V>
struct ValueTraits;

template <>
struct ValueTraits<std::int64_t> {
  static constexpr std::int64_t infinity() { return std::numeric_limits<std::int64_t>::max(); }
  static constexpr bool better(std::int64_t candidate, std::int64_t incumbent) { return candidate < incumbent; }
  static constexpr std::int64_t add(std::int64_t a, std::int64_t b) {
    return (a == infinity() || b == infinity()) ? infinity() : a + b;
  }
};

template <>
struct ValueTraits<double> {
  static constexpr double kTieTolerance = 1e-9;
  static constexpr double infinity() { return std::numeric_limits<double>::infinity(); }
  static constexpr bool better(double candidate, double incumbent) {
    return candidate < incumbent - kTieTolerance;
  }
  static constexpr double add(double a, double b) { return a + b; }
};

}  // namespace detail

struct RecursionOptions {
  /// Keep every value row (T x states); off by default to stay at two rows.
  bool keep_value_history = false;
  /// Rolling-horizon extension: at t = 1 only successors of this controller
  /// state are legal, instead of the phase-entry states.
  std::optional<int> warm_start = std::nullopt;
};

template <class Value>
struct DpTables {
  int horizon = 0;
  int state_count = 0;
  std::vector<Value> value_prev;
  std::vector<Value> value_curr;     // row T after the recursion
  std::vector<std::int32_t> pred;    // [(t-1)*state_count + s], -1 for none
  std::vector<Value> value_history;  // only with keep_value_history
  std::uint64_t relaxation_count = 0;

  std::int32_t pred_at(int t, int s) const { return pred[static_cast<std::size_t>(t - 1) * state_count + s]; }
  Value value_at(int t, int s) const {
    return value_history[static_cast<std::size_t>(t - 1) * state_count + s];
  }
  static constexpr Value infinity() { return detail::ValueTraits<Value>::infinity(); }
};

template <SeparableCost M>
DpTables<typename M::value_type> forward_recursion(const ProblemInstance& instance,
                                                   const StateGraph& graph, const M& model,
                                                   const RecursionOptions& options = {}) {
  using V = typename M::value_type;
  using Tr = detail::ValueTraits<V>;
  model.check(instance);

  const int states = graph.size();
  const int phases = graph.phase_count();
  const int horizon = instance.horizon();

  DpTables<V> tab;
  tab.horizon = horizon;
  tab.state_count = states;
  tab.value_prev.assign(states, Tr::infinity());
  tab.value_curr.assign(states, Tr::infinity());
  tab.pred.assign(static_cast<std::size_t>(horizon) * states, -1);
  if (options.keep_value_history) tab.value_history.reserve(static_cast<std::size_t>(horizon) * states);

  // Step cost depends only on which phase (or none) is served: |P|+1 slots.
  std::vector<V> slot_cost(phases + 1);
  auto load_costs = [&](int t) {
    for (int q = 0; q < phases; ++q) slot_cost[q] = model.served_cost(PhaseId{q}, t, instance);
    slot_cost[phases] = model.served_cost(std::nullopt, t, instance);
  };

  std::vector<char> holds(states, 0);
  for (int s = 0; s < states; ++s)
    holds[s] = graph.state(s).kind == SignalState::Kind::StablePhase;

  load_costs(1);
  if (options.warm_start) {
    if (*options.warm_start < 0 || *options.warm_start >= states)
      throw InvalidInput("warm_start: state index out of range");
    for (int s : graph.succs(*options.warm_start)) tab.value_curr[s] = slot_cost[graph.served_slot(s)];
  } else {
    for (int s : graph.initial_states()) tab.value_curr[s] = slot_cost[graph.served_slot(s)];
  }
  if (options.keep_value_history)
    tab.value_history.insert(tab.value_history.end(), tab.value_curr.begin(), tab.value_curr.end());

  for (int t = 2; t <= horizon; ++t) {
    std::swap(tab.value_prev, tab.value_curr);
    load_costs(t);
    const auto& prev = tab.value_prev;
    std::int32_t* pred_row = tab.pred.data() + static_cast<std::size_t>(t - 1) * states;

    for (int s = 0; s < states; ++s) {
      int arg = -1;
      V best = Tr::infinity();
      // Ties prefer holding the current phase, then the lowest index.
      if (holds[s] && prev[s] != Tr::infinity()) {
        best = prev[s];
        arg = s;
      }
      for (int q : graph.preds(s)) {
        ++tab.relaxation_count;
        if (q == s || prev[q] == Tr::infinity()) continue;
        if (arg < 0 || Tr::better(prev[q], best)) {
          best = prev[q];
          arg = q;
        }
      }
      tab.value_curr[s] = arg < 0 ? Tr::infinity() : Tr::add(best, slot_cost[graph.served_slot(s)]);
      pred_row[s] = arg;
    }
    if (options.keep_value_history)
      tab.value_history.insert(tab.value_history.end(), tab.value_curr.begin(), tab.value_curr.end());
  }
  return tab;
}

/// Best stable final state, then predecessors back to t = 1. Throws
/// Infeasible when no stable state is reachable at T.
template <class Value>
SolveResult trace_back(const DpTables<Value>& tab, const StateGraph& graph) {
  using Tr = detail::ValueTraits<Value>;
  int arg = -1;
  Value best = Tr::infinity();
  for (int s : graph.final_states()) {
    const Value v = tab.value_curr[s];
    if (v == Tr::infinity()) continue;
    if (arg < 0 || Tr::better(v, best)) {
      best = v;
      arg = s;
    }
  }
  if (arg < 0) throw Infeasible();

  SolveResult result;
  result.optimal_cost = static_cast<double>(best);
  result.op_count = tab.relaxation_count;
  result.state_sequence.resize(tab.horizon);
  int s = arg;
  for (int t = tab.horizon; t >= 1; --t) {
    result.state_sequence[t - 1] = s;
    if (t > 1) s = tab.pred_at(t, s);
  }
  result.plan = compress_states(result.state_sequence, graph);
  result.plan.total_cost = result.optimal_cost;
  return result;
}

template <SeparableCost M>
SolveResult solve_with(const ProblemInstance& instance, const M& model,
                       const RecursionOptions& options = {}) {
  const StateGraph graph = build_graph(instance);
  return trace_back(forward_recursion(instance, graph, model, options), graph);
}

SolveResult solve(const ProblemInstance& instance, const CostModel& model,
                  const RecursionOptions& options = {});

}  // namespace tsdp
