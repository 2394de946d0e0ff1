#pragma once

// Domain types for single-intersection signal timing: phases, problem
// instances, arrival tables and timing plans.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsdp {

/// Raised when an instance, plan document or argument violates a constraint.
/// The message names the violated constraint.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index of a signal phase. Labels are 'A', 'B', ... by index.
struct PhaseId {
  int index = 0;

  std::string label() const;
  static PhaseId from_label(const std::string& label);

  friend bool operator==(PhaseId, PhaseId) = default;
  friend auto operator<=>(PhaseId, PhaseId) = default;
};

/// Vehicle arrivals per phase per time step. Rows are phases, columns are
/// time steps 1..T (1-indexed at the accessor).
class ArrivalTable {
 public:
  ArrivalTable() = default;
  ArrivalTable(int phase_count, int horizon);  // zero-filled
  explicit ArrivalTable(std::vector<std::vector<std::int64_t>> rows);

  int phase_count() const { return phase_count_; }
  int horizon() const { return horizon_; }

  std::int64_t at(int phase, int t) const {
    return counts_[static_cast<std::size_t>(phase) * horizon_ + (t - 1)];
  }
  std::int64_t& at(int phase, int t) {
    return counts_[static_cast<std::size_t>(phase) * horizon_ + (t - 1)];
  }

  /// Sum over all phases at step t.
  std::int64_t total_at(int t) const;
  std::int64_t total() const;

  friend bool operator==(const ArrivalTable&, const ArrivalTable&) = default;

 private:
  int phase_count_ = 0;
  int horizon_ = 0;
  std::vector<std::int64_t> counts_;
};

/// A validated problem: horizon T, |P| phases, clearance r, minimum green γ.
/// Immutable once built.
class ProblemInstance {
 public:
  /// Throws InvalidInput naming the violated constraint.
  ProblemInstance(int horizon, int phase_count, int clearance, int min_green,
                  ArrivalTable arrivals);

  int horizon() const { return horizon_; }
  int phase_count() const { return phase_count_; }
  int clearance() const { return clearance_; }
  int min_green() const { return min_green_; }
  const ArrivalTable& arrivals() const { return arrivals_; }

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  int horizon_;
  int phase_count_;
  int clearance_;
  int min_green_;
  ArrivalTable arrivals_;
};

ProblemInstance new_instance(int horizon, int phase_count, int clearance,
                             int min_green, ArrivalTable arrivals);

/// Same instance restricted to the first `horizon` steps.
ProblemInstance truncate(const ProblemInstance& instance, int horizon);

struct PlanEntry {
  PhaseId phase;
  int start = 1;     // first green step, 1-indexed
  int duration = 0;  // green steps

  int end() const { return start + duration - 1; }
  friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

/// Green entries only. Between consecutive entries there is an implicit
/// clearance of exactly r steps; a plan may also end with one full clearance.
struct TimingPlan {
  std::vector<PlanEntry> entries;
  double total_cost = 0.0;

  friend bool operator==(const TimingPlan&, const TimingPlan&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate_plan(const TimingPlan& plan,
                               const ProblemInstance& instance);

}  // namespace tsdp
