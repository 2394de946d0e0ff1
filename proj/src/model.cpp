#include "tsdp/model.hpp"

#include <numeric>
#include <sstream>

namespace tsdp {

std::string PhaseId::label() const {
  if (index >= 0 && index < 26) return std::string(1, static_cast<char>('A' + index));
  return "P" + std::to_string(index);
}

PhaseId PhaseId::from_label(const std::string& label) {
  if (label.size() == 1 && label[0] >= 'A' && label[0] <= 'Z') return PhaseId{label[0] - 'A'};
  if (label.size() > 1 && label[0] == 'P') {
    std::size_t used = 0;
    int index = 0;
    try {
      index = std::stoi(label.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == label.size() - 1 && index >= 26) return PhaseId{index};
  }
  throw InvalidInput("phase: unknown phase label '" + label + "'");
}

ArrivalTable::ArrivalTable(int phase_count, int horizon)
    : phase_count_(phase_count),
      horizon_(horizon),
      counts_(static_cast<std::size_t>(phase_count) * horizon, 0) {
  if (phase_count < 0 || horizon < 0) throw InvalidInput("arrivals: negative dimensions");
}

ArrivalTable::ArrivalTable(std::vector<std::vector<std::int64_t>> rows)
    : phase_count_(static_cast<int>(rows.size())),
      horizon_(rows.empty() ? 0 : static_cast<int>(rows.front().size())) {
  counts_.reserve(static_cast<std::size_t>(phase_count_) * horizon_);
  for (std::size_t p = 0; p < rows.size(); ++p) {
    if (static_cast<int>(rows[p].size()) != horizon_) {
      throw InvalidInput("arrivals: row " + std::to_string(p) + " has " +
                         std::to_string(rows[p].size()) + " columns, expected " +
                         std::to_string(horizon_) + " (matrix must be rectangular)");
    }
    for (auto c : rows[p]) {
      if (c < 0) throw InvalidInput("arrivals: negative count in row " + std::to_string(p));
      counts_.push_back(c);
    }
  }
}

std::int64_t ArrivalTable::total_at(int t) const {
  std::int64_t sum = 0;
  for (int p = 0; p < phase_count_; ++p) sum += at(p, t);
  return sum;
}

std::int64_t ArrivalTable::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

ProblemInstance::ProblemInstance(int horizon, int phase_count, int clearance,
                                 int min_green, ArrivalTable arrivals)
    : horizon_(horizon),
      phase_count_(phase_count),
      clearance_(clearance),
      min_green_(min_green),
      arrivals_(std::move(arrivals)) {
  if (horizon < 1) throw InvalidInput("horizon: T must be >= 1");
  if (phase_count < 2) throw InvalidInput("phase_count: |P| must be >= 2");
  if (clearance < 1) throw InvalidInput("clearance: r must be >= 1");
  if (min_green < 1) throw InvalidInput("min_green: gamma must be >= 1");
  if (clearance > min_green) throw InvalidInput("clearance: r must be <= min_green (r <= gamma)");
  if (horizon < min_green) throw InvalidInput("horizon: T must be >= min_green (T >= gamma)");
  if (arrivals_.phase_count() != phase_count || arrivals_.horizon() != horizon) {
    std::ostringstream msg;
    msg << "arrivals: dimension mismatch, got " << arrivals_.phase_count() << "x"
        << arrivals_.horizon() << ", expected " << phase_count << "x" << horizon;
    throw InvalidInput(msg.str());
  }
  for (int p = 0; p < phase_count; ++p)
    for (int t = 1; t <= horizon; ++t)
      if (arrivals_.at(p, t) < 0) throw InvalidInput("arrivals: counts must be >= 0");
}

ProblemInstance new_instance(int horizon, int phase_count, int clearance,
                             int min_green, ArrivalTable arrivals) {
  return ProblemInstance(horizon, phase_count, clearance, min_green, std::move(arrivals));
}

ProblemInstance truncate(const ProblemInstance& instance, int horizon) {
  if (horizon > instance.horizon()) throw InvalidInput("horizon: cannot truncate to a longer horizon");
  ArrivalTable table(instance.phase_count(), horizon);
  for (int p = 0; p < instance.phase_count(); ++p)
    for (int t = 1; t <= horizon; ++t) table.at(p, t) = instance.arrivals().at(p, t);
  return ProblemInstance(horizon, instance.phase_count(), instance.clearance(),
                         instance.min_green(), std::move(table));
}

ValidationReport validate_plan(const TimingPlan& plan, const ProblemInstance& instance) {
  ValidationReport report;
  auto fail = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };

  const int r = instance.clearance();
  const int horizon = instance.horizon();
  if (plan.entries.empty()) {
    fail("plan has no entries");
    return report;
  }

  for (std::size_t k = 0; k < plan.entries.size(); ++k) {
    const auto& e = plan.entries[k];
    const auto ks = std::to_string(k);
    if (e.phase.index < 0 || e.phase.index >= instance.phase_count())
      fail("unknown phase at entry " + ks);
    if (e.duration < instance.min_green())
      fail("min green violated at entry " + ks + " (duration " + std::to_string(e.duration) +
           " < " + std::to_string(instance.min_green()) + ")");
    if (k == 0) {
      if (e.start != 1) fail("first entry must start at 1, starts at " + std::to_string(e.start));
    } else {
      const int expected = plan.entries[k - 1].end() + r + 1;
      if (e.start != expected)
        fail("clearance gap violated between entries " + std::to_string(k - 1) + " and " + ks +
             " (start " + std::to_string(e.start) + ", expected " + std::to_string(expected) + ")");
    }
  }

  // The horizon ends either on a green step or on the last step of a full
  // clearance interval.
  const int last_end = plan.entries.back().end();
  if (last_end != horizon && last_end + r != horizon) {
    fail("horizon coverage violated: plan occupies " + std::to_string(last_end) +
         " steps (+" + std::to_string(r) + " trailing clearance allowed), horizon is " +
         std::to_string(horizon));
  }
  return report;
}

}  // namespace tsdp
