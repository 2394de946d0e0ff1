#include "tsdp/costs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tsdp {

void WeightedStopsCost::check(const ProblemInstance& instance) const {
  if (static_cast<int>(weights.size()) != instance.phase_count())
    throw InvalidInput("cost: weighted-stops needs " + std::to_string(instance.phase_count()) +
                       " weights, got " + std::to_string(weights.size()));
  for (double w : weights)
    if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidInput("cost: weights must be finite and >= 0");
}

std::string WeightedStopsCost::name() const {
  // Shortest round-trip formatting, so parse then print is the identity.
  std::string out = "weighted-stops:";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ",";
    out += nlohmann::json(weights[i]).dump();
  }
  return out;
}

CostModel parse_cost_model(const std::string& spec) {
  if (spec == "stops") return StopsCost{};
  const std::string prefix = "weighted-stops:";
  if (spec.rfind(prefix, 0) == 0) {
    WeightedStopsCost model;
    std::stringstream list(spec.substr(prefix.size()));
    std::string item;
    while (std::getline(list, item, ',')) {
      std::size_t used = 0;
      double w = 0.0;
      try {
        w = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) throw InvalidInput("cost: bad weight '" + item + "'");
      if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidInput("cost: weights must be finite and >= 0");
      model.weights.push_back(w);
    }
    if (model.weights.empty()) throw InvalidInput("cost: weighted-stops needs at least one weight");
    return model;
  }
  throw InvalidInput("cost: unknown cost model '" + spec + "' (expected stops or weighted-stops:w0,w1,...)");
}

std::string cost_model_spec(const CostModel& model) {
  return std::visit([](const auto& m) { return m.name(); }, model);
}

bool is_integral(const CostModel& model) {
  return std::holds_alternative<StopsCost>(model);
}

void check_cost_model(const CostModel& model, const ProblemInstance& instance) {
  std::visit([&](const auto& m) { m.check(instance); }, model);
}

double step_cost(const CostModel& model, const SignalState& state, int t,
                 const ProblemInstance& instance) {
  if (t < 1 || t > instance.horizon())
    throw std::out_of_range("step_cost: t=" + std::to_string(t) + " outside [1, " +
                            std::to_string(instance.horizon()) + "]");
  return std::visit(
      [&](const auto& m) { return static_cast<double>(m.served_cost(serves(state), t, instance)); },
      model);
}

double sequence_cost(const CostModel& model, std::span<const int> sequence,
                     const StateGraph& graph, const ProblemInstance& instance) {
  double total = 0.0;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    total += step_cost(model, graph.state(sequence[i]), static_cast<int>(i) + 1, instance);
  return total;
}

std::vector<std::optional<PhaseId>> served_timeline(const TimingPlan& plan,
                                                    const ProblemInstance& instance) {
  std::vector<std::optional<PhaseId>> timeline(instance.horizon());
  for (const auto& e : plan.entries)
    for (int t = e.start; t <= e.end(); ++t)
      if (t >= 1 && t <= instance.horizon()) timeline[t - 1] = e.phase;
  return timeline;
}

PlanMetrics evaluate_plan(const TimingPlan& plan, const ProblemInstance& instance,
                          std::int64_t saturation_flow) {
  if (saturation_flow < 1) throw InvalidInput("saturation_flow must be >= 1");
  if (auto report = validate_plan(plan, instance); !report.ok())
    throw InvalidInput("evaluate_plan: invalid plan: " + report.violations.front());

  const int phases = instance.phase_count();
  const auto timeline = served_timeline(plan, instance);
  PlanMetrics m;
  m.max_queue.assign(phases, 0);
  std::vector<std::int64_t> queue(phases, 0);

  for (int t = 1; t <= instance.horizon(); ++t) {
    const auto served = timeline[t - 1];
    for (int q = 0; q < phases; ++q) {
      const std::int64_t arriving = instance.arrivals().at(q, t);
      const std::int64_t waiting = queue[q];
      queue[q] += arriving;
      if (served && served->index == q) {
        const std::int64_t out = std::min(queue[q], saturation_flow);
        queue[q] -= out;
        m.discharged += out;
        // FIFO: new arrivals get whatever capacity the waiting queue leaves.
        const std::int64_t through = std::clamp(saturation_flow - waiting, std::int64_t{0}, arriving);
        m.total_stops += arriving - through;
      } else {
        m.total_stops += arriving;
      }
      m.total_delay += queue[q];
      m.max_queue[q] = std::max(m.max_queue[q], queue[q]);
    }
  }
  m.final_queues = queue;
  return m;
}

}  // namespace tsdp
