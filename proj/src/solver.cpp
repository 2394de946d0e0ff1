#include "tsdp/solver.hpp"

namespace tsdp {

std::vector<std::string> SolveResult::state_labels(const StateGraph& graph) const {
  std::vector<std::string> labels;
  labels.reserve(state_sequence.size());
  for (int s : state_sequence) labels.push_back(graph.state(s).label());
  return labels;
}

SolveResult solve(const ProblemInstance& instance, const CostModel& model,
                  const RecursionOptions& options) {
  return std::visit([&](const auto& m) { return solve_with(instance, m, options); }, model);
}

}  // namespace tsdp
