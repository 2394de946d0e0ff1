#include "tsdp/documents.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace tsdp {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("document: malformed JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) throw InvalidInput("document: top level must be an object");
  auto it = doc.find(name);
  if (it == doc.end()) throw InvalidInput(std::string(name) + ": missing field");
  return *it;
}

int int_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer()) throw InvalidInput(std::string(name) + ": must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw InvalidInput(std::string(name) + ": out of range");
  return static_cast<int>(x);
}

std::string number_text(double value, bool integral) {
  if (integral && std::abs(value) < 9.0e15) return std::to_string(static_cast<std::int64_t>(value));
  return json(value).dump();
}

}  // namespace

std::string write_instance(const InstanceFile& file) {
  const auto& in = file.instance;
  std::ostringstream out;
  out << "{\n";
  out << "  \"horizon\": " << in.horizon() << ",\n";
  out << "  \"phase_count\": " << in.phase_count() << ",\n";
  out << "  \"clearance\": " << in.clearance() << ",\n";
  out << "  \"min_green\": " << in.min_green() << ",\n";
  out << "  \"cost\": " << json(cost_model_spec(file.cost)).dump() << ",\n";
  out << "  \"arrivals\": [\n";
  for (int p = 0; p < in.phase_count(); ++p) {
    out << "    [";
    for (int t = 1; t <= in.horizon(); ++t) out << (t > 1 ? ", " : "") << in.arrivals().at(p, t);
    out << "]" << (p + 1 < in.phase_count() ? "," : "") << "\n";
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

InstanceFile parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  const int horizon = int_field(doc, "horizon");
  const int phase_count = int_field(doc, "phase_count");
  const int clearance = int_field(doc, "clearance");
  const int min_green = int_field(doc, "min_green");

  CostModel cost = StopsCost{};
  if (doc.contains("cost")) {
    const json& c = doc.at("cost");
    if (!c.is_string()) throw InvalidInput("cost: must be a string");
    cost = parse_cost_model(c.get<std::string>());
  }

  const json& rows = field(doc, "arrivals");
  if (!rows.is_array()) throw InvalidInput("arrivals: must be an array of rows");
  std::vector<std::vector<std::int64_t>> matrix;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    const json& row = rows[p];
    if (!row.is_array()) throw InvalidInput("arrivals: row " + std::to_string(p) + " must be an array");
    auto& out = matrix.emplace_back();
    for (const json& x : row) {
      if (!x.is_number_integer()) throw InvalidInput("arrivals: row " + std::to_string(p) + " has a non-integer entry");
      out.push_back(x.get<std::int64_t>());
    }
  }
  InstanceFile file{ProblemInstance(horizon, phase_count, clearance, min_green,
                                    ArrivalTable(std::move(matrix))),
                    cost};
  check_cost_model(file.cost, file.instance);
  return file;
}

std::string write_plan(const SolveResult& result, const InstanceFile& file,
                       const PlanDocumentOptions& options) {
  const auto& in = file.instance;
  std::ostringstream out;
  out << "{\n";
  out << "  \"algorithm\": " << json(options.algorithm).dump() << ",\n";
  out << "  \"cost\": " << json(cost_model_spec(file.cost)).dump() << ",\n";
  out << "  \"horizon\": " << in.horizon() << ",\n";
  out << "  \"clearance\": " << in.clearance() << ",\n";
  out << "  \"min_green\": " << in.min_green() << ",\n";
  out << "  \"optimal_cost\": " << number_text(result.optimal_cost, is_integral(file.cost)) << ",\n";
  out << "  \"op_count\": " << result.op_count << ",\n";
  if (result.stage_budget_exhausted) out << "  \"stage_budget_exhausted\": true,\n";
  out << "  \"entries\": [\n";
  for (std::size_t i = 0; i < result.plan.entries.size(); ++i) {
    const auto& e = result.plan.entries[i];
    out << "    {\"phase\": \"" << e.phase.label() << "\", \"start\": " << e.start
        << ", \"duration\": " << e.duration << "}" << (i + 1 < result.plan.entries.size() ? "," : "")
        << "\n";
  }
  out << "  ]";
  if (options.emit_states) {
    const StateGraph graph = build_graph(in);
    out << ",\n  \"states\": [";
    const auto labels = result.state_labels(graph);
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << json(labels[i]).dump();
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

TimingPlan parse_plan(const std::string& text) {
  const json doc = parse_json(text);
  const json& entries = field(doc, "entries");
  if (!entries.is_array()) throw InvalidInput("entries: must be an array");
  TimingPlan plan;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    if (!e.is_object()) throw InvalidInput("entries: item " + std::to_string(i) + " must be an object");
    const json& phase = field(e, "phase");
    if (!phase.is_string()) throw InvalidInput("phase: must be a label string");
    plan.entries.push_back(PlanEntry{PhaseId::from_label(phase.get<std::string>()),
                                     int_field(e, "start"), int_field(e, "duration")});
  }
  if (doc.contains("optimal_cost")) {
    const json& c = doc.at("optimal_cost");
    if (!c.is_number()) throw InvalidInput("optimal_cost: must be a number");
    plan.total_cost = c.get<double>();
  }
  return plan;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << contents;
}

}  // namespace tsdp
