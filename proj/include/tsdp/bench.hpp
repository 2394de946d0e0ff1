#pragma once

// Scaling benchmark: wall time and exact operation counts against the
// horizon T for the linear DP and the phase-stage baseline.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tsdp/model.hpp"
#include "tsdp/workload.hpp"

namespace tsdp {

enum class Algorithm { Linear, Cop, Brute };

std::string algorithm_name(Algorithm algorithm);
Algorithm parse_algorithm(const std::string& name);  // throws InvalidInput

struct BenchRecord {
  std::string algorithm;
  int horizon = 0;
  std::uint64_t seed = 0;
  int reps = 0;
  double wall_time_s = 0.0;     // per solve, minimum over reps
  std::uint64_t op_count = 0;
  std::uint64_t iterations = 1; // solves per timed batch
};

struct SweepConfig {
  std::vector<int> horizons;  // ascending
  std::vector<Algorithm> algorithms{Algorithm::Linear, Algorithm::Cop};
  std::uint64_t seed = 42;
  int reps = 5;
  int cop_t_max = 512;
  int brute_t_max = 14;
  int phase_count = 3;
  int clearance = 2;
  int min_green = 3;
  RateProfile profile{RateProfile::Kind::Uniform, 0.5, 1};
  /// A timed batch repeats the solve until it lasts at least this long.
  double min_batch_s = 1e-3;
};

/// 8, 16, ..., up to and including `last` when it is on the sequence.
std::vector<int> geometric_horizons(int first, int last);

ProblemInstance bench_instance(const SweepConfig& config, int horizon);

/// One record per (algorithm, T), algorithms outermost. Measurements run one
/// at a time after a discarded warm-up solve.
std::vector<BenchRecord> run_sweep(const SweepConfig& config);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Least squares of log(wall time) on log(T). Records whose timed batch
/// (wall_time_s * iterations) is shorter than floor_s are excluded. Throws
/// InvalidInput with fewer than four usable records.
LogLogFit fit_loglog(std::span<const BenchRecord> records, double floor_s = 1e-3);

struct SpeedupRow {
  int horizon = 0;
  double ratio = 0.0;  // baseline time / candidate time
};

struct SpeedupReport {
  std::vector<SpeedupRow> rows;  // ascending T
  SpeedupRow largest;            // at the largest common T
};

/// Throws InvalidInput when the two algorithms share no T.
SpeedupReport speedup_report(std::span<const BenchRecord> records,
                             const std::string& baseline = "cop",
                             const std::string& candidate = "linear");

/// Columns: algorithm,T,seed,reps,wall_time_s,op_count
std::string to_csv(std::span<const BenchRecord> records);

std::vector<BenchRecord> select(std::span<const BenchRecord> records, const std::string& algorithm,
                                int min_horizon = 0, int max_horizon = 1 << 30);

}  // namespace tsdp
