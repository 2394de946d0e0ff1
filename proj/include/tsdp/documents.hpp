#pragma once

// Instance and plan documents (JSON). The writers emit a canonical layout
// with fixed field order and one arrival row per line, so parse followed by
// write reproduces a canonical document byte for byte. See docs/formats.md.

#include <string>

#include "tsdp/costs.hpp"
#include "tsdp/model.hpp"
#include "tsdp/solver.hpp"
#include "tsdp/state_space.hpp"

namespace tsdp {

struct InstanceFile {
  ProblemInstance instance;
  CostModel cost = StopsCost{};
};

std::string write_instance(const InstanceFile& file);
/// Throws InvalidInput naming the offending field.
InstanceFile parse_instance(const std::string& text);

struct PlanDocumentOptions {
  std::string algorithm = "linear";
  bool emit_states = false;
};

std::string write_plan(const SolveResult& result, const InstanceFile& file,
                       const PlanDocumentOptions& options);
/// Reads the entries (and optimal_cost when present) of a plan document.
TimingPlan parse_plan(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace tsdp
