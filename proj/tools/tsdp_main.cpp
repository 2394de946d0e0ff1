// tsdp: optimal signal timing plans for one intersection.
//
//   tsdp generate --horizon 64 --phases 3 --seed 42 --profile uniform:0.5
//   tsdp solve instance.json --algorithm linear --emit-states
//   tsdp validate instance.json plan.json
//   tsdp bench --t-max 4096 --t-max-cop 512 --reps 5
//   tsdp graph-dump --phases 3 --clearance 2 --min-green 3
//
// Exit codes: 0 success, 1 infeasible or validation failed, 2 input error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsdp/baselines.hpp"
#include "tsdp/bench.hpp"
#include "tsdp/documents.hpp"
#include "tsdp/solver.hpp"
#include "tsdp/workload.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

void emit(const std::string& output, const std::string& text) {
  if (output.empty() || output == "-") std::cout << text;
  else tsdp::write_file(output, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal traffic-signal timing plans via a linear-time dynamic program"};
  app.require_subcommand(1);

  std::string output;

  // generate
  int gen_horizon = 0, gen_phases = 3, gen_clearance = 2, gen_min_green = 3;
  std::uint64_t gen_seed = 42;
  std::string gen_profile = "uniform:0.5", gen_cost = "stops";
  auto* generate = app.add_subcommand("generate", "Write a seeded synthetic instance");
  generate->add_option("--horizon", gen_horizon, "Horizon T in steps")->required();
  generate->add_option("--phases", gen_phases, "Number of phases |P|");
  generate->add_option("--clearance", gen_clearance, "Clearance interval r");
  generate->add_option("--min-green", gen_min_green, "Minimum green gamma");
  generate->add_option("--seed", gen_seed, "Workload seed");
  generate->add_option("--profile", gen_profile, "uniform:<mean> or pulse:<period>,<mean>");
  generate->add_option("--cost", gen_cost, "stops or weighted-stops:w0,w1,...");
  generate->add_option("--output", output, "Output file (default stdout)");

  // solve
  std::string solve_file, algorithm = "linear", cost_override;
  bool emit_states = false;
  int brute_cap = tsdp::BruteForceOptions{}.max_horizon;
  int max_stages = 0;
  auto* solve = app.add_subcommand("solve", "Solve an instance and print the plan document");
  solve->add_option("instance", solve_file, "Instance file")->required();
  solve->add_option("--algorithm", algorithm, "linear, cop or brute");
  solve->add_option("--cost", cost_override, "Override the instance cost model");
  solve->add_flag("--emit-states", emit_states, "Include the per-step state labels");
  solve->add_option("--brute-cap", brute_cap, "Largest T brute force accepts");
  solve->add_option("--max-stages", max_stages, "Stage budget for cop (default: enough for any plan)");
  solve->add_option("--output", output, "Output file (default stdout)");

  // validate
  std::string validate_instance, validate_plan_file;
  auto* validate = app.add_subcommand("validate", "Check a plan document against an instance");
  validate->add_option("instance", validate_instance, "Instance file")->required();
  validate->add_option("plan", validate_plan_file, "Plan document")->required();
  validate->add_option("--output", output, "Output file (default stdout)");

  // bench
  tsdp::SweepConfig sweep;
  int t_min = 8, t_max = 4096;
  std::vector<std::string> bench_algorithms{"linear", "cop"};
  std::string bench_profile = sweep.profile.spec();
  auto* bench = app.add_subcommand("bench", "Time both algorithms over a geometric T sweep (CSV)");
  bench->add_option("--t-min", t_min, "Smallest T");
  bench->add_option("--t-max", t_max, "Largest T");
  bench->add_option("--algorithm", bench_algorithms, "Algorithms to run")->expected(1, 3);
  bench->add_option("--t-max-cop", sweep.cop_t_max, "Largest T for the cop baseline");
  bench->add_option("--reps", sweep.reps, "Timed repetitions (minimum is reported)");
  bench->add_option("--seed", sweep.seed, "Workload seed");
  bench->add_option("--phases", sweep.phase_count, "Number of phases |P|");
  bench->add_option("--clearance", sweep.clearance, "Clearance interval r");
  bench->add_option("--min-green", sweep.min_green, "Minimum green gamma");
  bench->add_option("--profile", bench_profile, "Arrival profile");
  bench->add_option("--output", output, "Output file (default stdout)");

  // graph-dump
  std::string graph_file;
  int graph_phases = 3, graph_clearance = 2, graph_min_green = 3;
  auto* graph = app.add_subcommand("graph-dump", "Print the DP state graph in DOT syntax");
  graph->add_option("instance", graph_file, "Take |P|, r, gamma from an instance file");
  graph->add_option("--phases", graph_phases, "Number of phases |P|");
  graph->add_option("--clearance", graph_clearance, "Clearance interval r");
  graph->add_option("--min-green", graph_min_green, "Minimum green gamma");
  graph->add_option("--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*generate) {
      const auto profile = tsdp::RateProfile::parse(gen_profile);
      const auto cost = tsdp::parse_cost_model(gen_cost);
      tsdp::InstanceFile file{
          tsdp::ProblemInstance(gen_horizon, gen_phases, gen_clearance, gen_min_green,
                                tsdp::generate_arrivals(gen_phases, gen_horizon, gen_seed, profile)),
          cost};
      tsdp::check_cost_model(file.cost, file.instance);
      emit(output, tsdp::write_instance(file));
      return kExitOk;
    }

    if (*solve) {
      auto file = tsdp::parse_instance(tsdp::read_file(solve_file));
      if (!cost_override.empty()) {
        file.cost = tsdp::parse_cost_model(cost_override);
        tsdp::check_cost_model(file.cost, file.instance);
      }
      tsdp::SolveResult result;
      switch (tsdp::parse_algorithm(algorithm)) {
        case tsdp::Algorithm::Linear: result = tsdp::solve(file.instance, file.cost); break;
        case tsdp::Algorithm::Cop: {
          tsdp::CopOptions options;
          if (max_stages > 0) options.max_stages = max_stages;
          result = tsdp::cop_solve(file.instance, file.cost, options);
          break;
        }
        case tsdp::Algorithm::Brute:
          result = tsdp::brute_force(file.instance, file.cost, tsdp::BruteForceOptions{brute_cap});
          break;
      }
      emit(output, tsdp::write_plan(result, file, {algorithm, emit_states}));
      return kExitOk;
    }

    if (*validate) {
      const auto file = tsdp::parse_instance(tsdp::read_file(validate_instance));
      const auto plan = tsdp::parse_plan(tsdp::read_file(validate_plan_file));
      const auto report = tsdp::validate_plan(plan, file.instance);
      nlohmann::ordered_json doc;
      doc["valid"] = report.ok();
      doc["violations"] = report.violations;
      emit(output, doc.dump(2) + "\n");
      return report.ok() ? kExitOk : kExitFailed;
    }

    if (*bench) {
      sweep.horizons = tsdp::geometric_horizons(t_min, t_max);
      sweep.profile = tsdp::RateProfile::parse(bench_profile);
      sweep.algorithms.clear();
      for (const auto& name : bench_algorithms) sweep.algorithms.push_back(tsdp::parse_algorithm(name));
      (void)tsdp::bench_instance(sweep, std::max(t_min, sweep.min_green));  // validate shape early

      const auto records = tsdp::run_sweep(sweep);
      emit(output, tsdp::to_csv(records));
      for (const auto& name : bench_algorithms) {
        const auto rows = tsdp::select(records, name);
        try {
          const auto fit = tsdp::fit_loglog(rows);
          std::cerr << name << ": log-log slope " << fit.slope << " (r^2 " << fit.r_squared << ", "
                    << fit.points << " points)\n";
        } catch (const tsdp::InvalidInput& e) {
          std::cerr << name << ": " << e.what() << "\n";
        }
      }
      try {
        const auto report = tsdp::speedup_report(records);
        for (const auto& row : report.rows)
          std::cerr << "speedup T=" << row.horizon << ": " << row.ratio << "x\n";
      } catch (const tsdp::InvalidInput&) {
      }
      return kExitOk;
    }

    if (*graph) {
      if (!graph_file.empty()) {
        const auto file = tsdp::parse_instance(tsdp::read_file(graph_file));
        graph_phases = file.instance.phase_count();
        graph_clearance = file.instance.clearance();
        graph_min_green = file.instance.min_green();
      }
      emit(output, tsdp::StateGraph(graph_phases, graph_clearance, graph_min_green).to_dot());
      return kExitOk;
    }
  } catch (const tsdp::Infeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const tsdp::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
