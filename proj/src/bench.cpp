#include "tsdp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "tsdp/baselines.hpp"
#include "tsdp/costs.hpp"
#include "tsdp/solver.hpp"

namespace tsdp {

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Linear: return "linear";
    case Algorithm::Cop: return "cop";
    case Algorithm::Brute: return "brute";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "linear") return Algorithm::Linear;
  if (name == "cop") return Algorithm::Cop;
  if (name == "brute") return Algorithm::Brute;
  throw InvalidInput("algorithm: expected linear, cop or brute, got '" + name + "'");
}

std::vector<int> geometric_horizons(int first, int last) {
  std::vector<int> out;
  for (long long t = first; t <= last; t *= 2) out.push_back(static_cast<int>(t));
  return out;
}

ProblemInstance bench_instance(const SweepConfig& config, int horizon) {
  return ProblemInstance(horizon, config.phase_count, config.clearance, config.min_green,
                         generate_arrivals(config.phase_count, horizon, config.seed, config.profile));
}

namespace {

using Clock = std::chrono::steady_clock;

volatile double g_sink = 0.0;

double time_batch(const std::function<double()>& solve_once, std::uint64_t iterations) {
  const auto start = Clock::now();
  double acc = 0.0;
  for (std::uint64_t i = 0; i < iterations; ++i) acc += solve_once();
  const auto stop = Clock::now();
  g_sink = g_sink + acc;
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

std::vector<BenchRecord> run_sweep(const SweepConfig& config) {
  if (!std::is_sorted(config.horizons.begin(), config.horizons.end()))
    throw InvalidInput("bench: T values must be ascending");
  if (config.reps < 1) throw InvalidInput("bench: reps must be >= 1");

  std::vector<BenchRecord> records;
  const StopsCost model;
  for (Algorithm algorithm : config.algorithms) {
    for (int horizon : config.horizons) {
      if (algorithm == Algorithm::Cop && horizon > config.cop_t_max) continue;
      if (algorithm == Algorithm::Brute && horizon > config.brute_t_max) continue;
      const ProblemInstance instance = bench_instance(config, horizon);

      std::uint64_t op_count = 0;
      std::function<double()> solve_once = [&]() -> double {
        SolveResult r;
        switch (algorithm) {
          case Algorithm::Linear: r = solve_with(instance, model); break;
          case Algorithm::Cop: r = cop_solve_with(instance, model); break;
          case Algorithm::Brute:
            r = brute_force_with(instance, model, BruteForceOptions{config.brute_t_max});
            break;
        }
        op_count = r.op_count;
        return r.optimal_cost;
      };

      // Warm-up, then grow the batch until it clears the timer floor.
      double batch = time_batch(solve_once, 1);
      std::uint64_t iterations = 1;
      while (batch < config.min_batch_s) {
        const double scale = batch > 0.0 ? 1.5 * config.min_batch_s / batch : 16.0;
        iterations = static_cast<std::uint64_t>(
            std::ceil(static_cast<double>(iterations) * std::clamp(scale, 2.0, 1024.0)));
        batch = time_batch(solve_once, iterations);
      }

      double best = std::numeric_limits<double>::infinity();
      for (int rep = 0; rep < config.reps; ++rep)
        best = std::min(best, time_batch(solve_once, iterations) / static_cast<double>(iterations));

      records.push_back(BenchRecord{algorithm_name(algorithm), horizon, config.seed, config.reps,
                                    best, op_count, iterations});
    }
  }
  return records;
}

LogLogFit fit_loglog(std::span<const BenchRecord> records, double floor_s) {
  std::vector<double> xs, ys;
  for (const auto& r : records) {
    if (r.wall_time_s <= 0.0 || r.horizon <= 0) continue;
    if (r.wall_time_s * static_cast<double>(r.iterations) < floor_s) continue;
    xs.push_back(std::log(static_cast<double>(r.horizon)));
    ys.push_back(std::log(r.wall_time_s));
  }
  if (xs.size() < 4)
    throw InvalidInput("fit_loglog: need at least 4 records above the timing floor, got " +
                       std::to_string(xs.size()));

  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw InvalidInput("fit_loglog: all records share one T");

  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.points = xs.size();
  return fit;
}

SpeedupReport speedup_report(std::span<const BenchRecord> records, const std::string& baseline,
                             const std::string& candidate) {
  std::map<int, double> base, cand;
  for (const auto& r : records) {
    if (r.algorithm == baseline) base[r.horizon] = r.wall_time_s;
    if (r.algorithm == candidate) cand[r.horizon] = r.wall_time_s;
  }
  SpeedupReport report;
  for (const auto& [horizon, time] : base) {
    auto it = cand.find(horizon);
    if (it == cand.end() || it->second <= 0.0) continue;
    report.rows.push_back(SpeedupRow{horizon, time / it->second});
  }
  if (report.rows.empty())
    throw InvalidInput("speedup_report: no common T for " + baseline + " and " + candidate);
  report.largest = report.rows.back();
  return report;
}

std::string to_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  out << "algorithm,T,seed,reps,wall_time_s,op_count\n";
  char time_text[32];
  for (const auto& r : records) {
    std::snprintf(time_text, sizeof time_text, "%.9e", r.wall_time_s);
    out << r.algorithm << ',' << r.horizon << ',' << r.seed << ',' << r.reps << ','
        << time_text << ',' << r.op_count << '\n';
  }
  return out.str();
}

std::vector<BenchRecord> select(std::span<const BenchRecord> records, const std::string& algorithm,
                                int min_horizon, int max_horizon) {
  std::vector<BenchRecord> out;
  for (const auto& r : records)
    if (r.algorithm == algorithm && r.horizon >= min_horizon && r.horizon <= max_horizon)
      out.push_back(r);
  return out;
}

}  // namespace tsdp
