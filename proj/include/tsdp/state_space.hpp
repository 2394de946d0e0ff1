#pragma once

// DP state graph: every signal state the forward recursion tracks, with the
// predecessor relation that enforces minimum green and clearance.
//
// Canonical ordering (indices):
//   0                      stable clearance "0"
//   1 .. r-1               clearance countdown "10", "20", ...
//   r + p*γ + (k-1)        min-green countup "kX" for phase p, k = 1..γ-1
//   r + p*γ + (γ-1)        stable phase "X"
// giving γ·|P| + r states.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsdp/model.hpp"

namespace tsdp {

struct SignalState {
  enum class Kind : std::uint8_t { StableClearance, UnstableClearance, StablePhase, UnstablePhase };

  Kind kind = Kind::StableClearance;
  int count = 0;  // k for the unstable kinds, 0 otherwise
  int phase = -1; // phase index for the phase kinds, -1 otherwise

  static SignalState stable_clearance() { return {Kind::StableClearance, 0, -1}; }
  static SignalState unstable_clearance(int k) { return {Kind::UnstableClearance, k, -1}; }
  static SignalState stable_phase(int p) { return {Kind::StablePhase, 0, p}; }
  static SignalState unstable_phase(int k, int p) { return {Kind::UnstablePhase, k, p}; }

  bool is_stable() const { return kind == Kind::StableClearance || kind == Kind::StablePhase; }
  bool is_clearance() const { return kind == Kind::StableClearance || kind == Kind::UnstableClearance; }

  /// "0", "10", "A", "2A", ...
  std::string label() const;

  friend bool operator==(const SignalState&, const SignalState&) = default;
};

/// Phase that has right of way in `state`. Min-green countup states are green.
std::optional<PhaseId> serves(const SignalState& state);

class StateGraph {
 public:
  StateGraph(int phase_count, int clearance, int min_green);

  int phase_count() const { return phase_count_; }
  int clearance() const { return clearance_; }
  int min_green() const { return min_green_; }

  int size() const { return static_cast<int>(states_.size()); }
  const std::vector<SignalState>& states() const { return states_; }
  const SignalState& state(int index) const { return states_[index]; }

  std::span<const int> preds(int index) const {
    return {pred_flat_.data() + pred_offsets_[index],
            pred_flat_.data() + pred_offsets_[index + 1]};
  }
  std::span<const int> succs(int index) const {
    return {succ_flat_.data() + succ_offsets_[index],
            succ_flat_.data() + succ_offsets_[index + 1]};
  }

  const std::vector<int>& initial_states() const { return initial_; }
  /// Stable phases in index order, then stable clearance.
  const std::vector<int>& final_states() const { return final_; }

  int edge_count() const { return static_cast<int>(pred_flat_.size()); }

  // Index helpers; bounds follow the canonical ordering above.
  int stable_clearance_index() const { return 0; }
  int clearance_index(int k) const { return k; }
  int unstable_phase_index(int k, int phase) const { return clearance_ + phase * min_green_ + k - 1; }
  int stable_phase_index(int phase) const { return clearance_ + phase * min_green_ + min_green_ - 1; }
  /// Index of the state the clearance interval begins in after a green.
  int clearance_entry_index() const { return clearance_ >= 2 ? 1 : 0; }
  /// Index of the state a phase begins in after clearance or at t = 1.
  int phase_entry_index(int phase) const {
    return min_green_ >= 2 ? unstable_phase_index(1, phase) : stable_phase_index(phase);
  }

  /// Served phase of each state, encoded as phase index or phase_count() for none.
  int served_slot(int index) const { return served_slot_[index]; }

  /// Index of the state with this label, or nullopt.
  std::optional<int> find(const std::string& label) const;

  /// Successor-arrow dump in graphviz DOT syntax.
  std::string to_dot() const;

 private:
  int phase_count_;
  int clearance_;
  int min_green_;
  std::vector<SignalState> states_;
  std::vector<int> pred_offsets_, pred_flat_;
  std::vector<int> succ_offsets_, succ_flat_;
  std::vector<int> initial_, final_;
  std::vector<int> served_slot_;
};

StateGraph build_graph(const ProblemInstance& instance);

/// Expand a cold-start plan into its per-step state sequence (length T).
std::vector<int> plan_to_states(const TimingPlan& plan, const StateGraph& graph, int horizon);

/// Collapse a state sequence into green entries; clearance runs become the
/// implicit gaps.
TimingPlan compress_states(std::span<const int> sequence, const StateGraph& graph);

}  // namespace tsdp
