#pragma once

// Separable per-step cost models for the forward recursion, and a queue
// simulation for reporting history-dependent metrics (delay, queues).

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tsdp/model.hpp"
#include "tsdp/state_space.hpp"

namespace tsdp {

/// Vehicles that arrive while their phase is not green. Exact integers.
struct StopsCost {
  using value_type = std::int64_t;

  void check(const ProblemInstance&) const {}
  value_type served_cost(std::optional<PhaseId> served, int t, const ProblemInstance& instance) const {
    const auto& a = instance.arrivals();
    value_type sum = 0;
    for (int q = 0; q < instance.phase_count(); ++q)
      if (!served || served->index != q) sum += a.at(q, t);
    return sum;
  }
  std::string name() const { return "stops"; }
};

/// StopsCost with a non-negative weight per phase.
struct WeightedStopsCost {
  using value_type = double;

  std::vector<double> weights;

  void check(const ProblemInstance& instance) const;
  value_type served_cost(std::optional<PhaseId> served, int t, const ProblemInstance& instance) const {
    const auto& a = instance.arrivals();
    value_type sum = 0.0;
    for (int q = 0; q < instance.phase_count(); ++q)
      if (!served || served->index != q) sum += weights[q] * static_cast<double>(a.at(q, t));
    return sum;
  }
  std::string name() const;
};

/// A cost that depends only on (served phase, t, instance data). Any type
/// meeting this can drive the solver and the baselines.
template <class M>
concept SeparableCost = requires(const M& m, std::optional<PhaseId> served, int t,
                                 const ProblemInstance& instance) {
  typename M::value_type;
  requires std::integral<typename M::value_type> || std::floating_point<typename M::value_type>;
  { m.served_cost(served, t, instance) } -> std::convertible_to<typename M::value_type>;
  { m.check(instance) };
};

using CostModel = std::variant<StopsCost, WeightedStopsCost>;

/// "stops" or "weighted-stops:w0,w1,...". Throws InvalidInput.
CostModel parse_cost_model(const std::string& spec);
std::string cost_model_spec(const CostModel& model);
bool is_integral(const CostModel& model);
void check_cost_model(const CostModel& model, const ProblemInstance& instance);

/// Cost of occupying `state` at step t. Throws std::out_of_range unless 1 <= t <= T.
double step_cost(const CostModel& model, const SignalState& state, int t,
                 const ProblemInstance& instance);

/// Sum of step costs along a full state sequence (index t-1 holds step t).
double sequence_cost(const CostModel& model, std::span<const int> sequence,
                     const StateGraph& graph, const ProblemInstance& instance);

/// Served phase per step for a cold-start plan (index t-1 holds step t).
std::vector<std::optional<PhaseId>> served_timeline(const TimingPlan& plan,
                                                    const ProblemInstance& instance);

struct PlanMetrics {
  std::int64_t total_stops = 0;
  std::int64_t total_delay = 0;  // vehicle-steps
  std::int64_t discharged = 0;
  std::vector<std::int64_t> max_queue;
  std::vector<std::int64_t> final_queues;
};

/// Queue simulation. Each step: arrivals join their queue, the served queue
/// discharges up to saturation_flow (FIFO, same-step arrivals included), then
/// every remaining queued vehicle adds one step of delay. A vehicle counts as a
/// stop unless it is discharged in its arrival step.
PlanMetrics evaluate_plan(const TimingPlan& plan, const ProblemInstance& instance,
                          std::int64_t saturation_flow);

}  // namespace tsdp
