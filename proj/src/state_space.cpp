#include "tsdp/state_space.hpp"

#include <algorithm>
#include <sstream>

namespace tsdp {

std::string SignalState::label() const {
  switch (kind) {
    case Kind::StableClearance: return "0";
    case Kind::UnstableClearance: return std::to_string(count) + "0";
    case Kind::StablePhase: return PhaseId{phase}.label();
    case Kind::UnstablePhase: return std::to_string(count) + PhaseId{phase}.label();
  }
  return "?";
}

std::optional<PhaseId> serves(const SignalState& state) {
  if (state.is_clearance()) return std::nullopt;
  return PhaseId{state.phase};
}

StateGraph::StateGraph(int phase_count, int clearance, int min_green)
    : phase_count_(phase_count), clearance_(clearance), min_green_(min_green) {
  if (phase_count < 1 || clearance < 1 || min_green < 1)
    throw InvalidInput("state graph: |P|, r and gamma must be >= 1");
  if (clearance > min_green) throw InvalidInput("clearance: r must be <= min_green (r <= gamma)");

  const int n = min_green * phase_count + clearance;
  states_.reserve(n);
  states_.push_back(SignalState::stable_clearance());
  for (int k = 1; k < clearance; ++k) states_.push_back(SignalState::unstable_clearance(k));
  for (int p = 0; p < phase_count; ++p) {
    for (int k = 1; k < min_green; ++k) states_.push_back(SignalState::unstable_phase(k, p));
    states_.push_back(SignalState::stable_phase(p));
  }

  std::vector<std::vector<int>> preds(n);
  std::vector<int> all_stable_phases;
  for (int p = 0; p < phase_count; ++p) all_stable_phases.push_back(stable_phase_index(p));

  // Green ends: any stable phase may enter the clearance interval.
  preds[clearance_entry_index()] = all_stable_phases;
  for (int k = 2; k < clearance; ++k) preds[clearance_index(k)] = {clearance_index(k - 1)};
  if (clearance >= 2) preds[stable_clearance_index()] = {clearance_index(clearance - 1)};

  for (int p = 0; p < phase_count; ++p) {
    // Completed clearance starts the next phase.
    preds[phase_entry_index(p)].push_back(stable_clearance_index());
    for (int k = 2; k < min_green; ++k)
      preds[unstable_phase_index(k, p)].push_back(unstable_phase_index(k - 1, p));
    if (min_green >= 2) preds[stable_phase_index(p)].push_back(unstable_phase_index(min_green - 1, p));
    preds[stable_phase_index(p)].push_back(stable_phase_index(p));
  }

  std::vector<std::vector<int>> succs(n);
  pred_offsets_.push_back(0);
  for (int s = 0; s < n; ++s) {
    std::sort(preds[s].begin(), preds[s].end());
    for (int q : preds[s]) {
      pred_flat_.push_back(q);
      succs[q].push_back(s);
    }
    pred_offsets_.push_back(static_cast<int>(pred_flat_.size()));
  }
  succ_offsets_.push_back(0);
  for (int s = 0; s < n; ++s) {
    succ_flat_.insert(succ_flat_.end(), succs[s].begin(), succs[s].end());
    succ_offsets_.push_back(static_cast<int>(succ_flat_.size()));
  }

  for (int p = 0; p < phase_count; ++p) initial_.push_back(phase_entry_index(p));
  final_ = all_stable_phases;
  final_.push_back(stable_clearance_index());

  served_slot_.reserve(n);
  for (const auto& st : states_) served_slot_.push_back(st.is_clearance() ? phase_count : st.phase);
}

std::optional<int> StateGraph::find(const std::string& label) const {
  std::string key;
  for (char c : label)
    if (c != ' ') key.push_back(c);
  for (int s = 0; s < size(); ++s)
    if (states_[s].label() == key) return s;
  return std::nullopt;
}

std::string StateGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph signal_states {\n";
  out << "  // |P|=" << phase_count_ << " r=" << clearance_ << " gamma=" << min_green_
      << " states=" << size() << " edges=" << edge_count() << "\n";
  for (int s = 0; s < size(); ++s) {
    out << "  \"" << states_[s].label() << "\"";
    const bool initial = std::find(initial_.begin(), initial_.end(), s) != initial_.end();
    if (initial) out << " [style=filled, fillcolor=gray]";
    else if (states_[s].is_stable()) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (int s = 0; s < size(); ++s)
    for (int next : succs(s))
      out << "  \"" << states_[s].label() << "\" -> \"" << states_[next].label() << "\";\n";
  out << "}\n";
  return out.str();
}

StateGraph build_graph(const ProblemInstance& instance) {
  return StateGraph(instance.phase_count(), instance.clearance(), instance.min_green());
}

std::vector<int> plan_to_states(const TimingPlan& plan, const StateGraph& graph, int horizon) {
  const int gamma = graph.min_green();
  const int r = graph.clearance();
  std::vector<int> seq;
  seq.reserve(horizon);
  auto clearance = [&] {
    for (int k = 1; k < r; ++k) seq.push_back(graph.clearance_index(k));
    seq.push_back(graph.stable_clearance_index());
  };
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    const auto& e = plan.entries[i];
    if (i > 0) clearance();
    for (int k = 1; k <= e.duration; ++k)
      seq.push_back(k < gamma ? graph.unstable_phase_index(k, e.phase.index)
                              : graph.stable_phase_index(e.phase.index));
  }
  if (static_cast<int>(seq.size()) + r == horizon) clearance();
  if (static_cast<int>(seq.size()) != horizon)
    throw InvalidInput("plan does not cover the horizon exactly");
  return seq;
}

TimingPlan compress_states(std::span<const int> sequence, const StateGraph& graph) {
  TimingPlan plan;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto served = serves(graph.state(sequence[i]));
    if (!served) continue;
    const bool continues = i > 0 && !plan.entries.empty() &&
                           plan.entries.back().end() == static_cast<int>(i) &&
                           plan.entries.back().phase == *served;
    if (continues) {
      ++plan.entries.back().duration;
    } else {
      plan.entries.push_back(PlanEntry{*served, static_cast<int>(i) + 1, 1});
    }
  }
  return plan;
}

}  // namespace tsdp
