#include "tsdp/baselines.hpp"

namespace tsdp {

SolveResult brute_force(const ProblemInstance& instance, const CostModel& model,
                        const BruteForceOptions& options) {
  return std::visit([&](const auto& m) { return brute_force_with(instance, m, options); }, model);
}

int cop_required_stages(const ProblemInstance& instance) {
  const int entries = (instance.horizon() + instance.min_green() - 1) / instance.min_green();
  return instance.phase_count() * entries;
}

SolveResult cop_solve(const ProblemInstance& instance, const CostModel& model,
                      const CopOptions& options) {
  return std::visit([&](const auto& m) { return cop_solve_with(instance, m, options); }, model);
}

}  // namespace tsdp
