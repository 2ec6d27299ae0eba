#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "comet/metrics.hpp"
#include "comet/scenario_io.hpp"
#include "comet/simulation.hpp"

namespace comet {

struct CorridorConfig {
  double length = 20.0;
  double halfwidth = 3.0;
  double spawn_start = 3.0;       // pedestrians spawn at x >= spawn_start
  double min_speed = 0.5;
  double max_speed = 1.5;
  int min_group = 2;
  int max_group = 5;
  double member_spacing = 1.2;    // typical distance of a member from the group center, meters
  double oncoming_fraction = 0.5; // share of groups walking toward the robot
};

/// Randomized corridor: robot from (0, 0) to (length, 0), pedestrians in
/// clusters of min_group..max_group members sharing one velocity along the
/// corridor axis. Walls at y = +-halfwidth bind the robot only.
Scenario make_corridor_scenario(int pedestrians, std::uint64_t seed, const CorridorConfig& corridor,
                                const Scenario& base);

struct BenchmarkConfig {
  std::vector<int> counts{10, 20, 30, 40, 50};
  int trials = 50;
  std::vector<PlannerKind> planners{PlannerKind::Dwa, PlannerKind::Frozone, PlannerKind::Comet};
  std::uint64_t base_seed = 1;
  int threads = 1;
  int bootstrap_resamples = 2000;
  CorridorConfig corridor;
  Scenario base;  // dt, max_steps, sensor and params for every trial
};

void to_json(json& j, const BenchmarkConfig& c);
void from_json(const json& j, BenchmarkConfig& c);
BenchmarkConfig load_benchmark_config(const std::filesystem::path& path);

/// Seed of trial `index` at pedestrian count `count`; every planner gets the
/// same one.
std::uint64_t trial_seed(std::uint64_t base, int count, int index);

struct CellStats {
  PlannerKind planner = PlannerKind::Dwa;
  int count = 0;
  int trials = 0;
  int reached = 0;
  int frozen = 0;
  double mean_avg_deviation_deg = 0.0;
  double freezing_rate = 0.0;
  Interval freezing_ci;
  double mean_normalized_path_length = 0.0;  // over goal-reaching trials
  double mean_collisions = 0.0;
};

struct BatchReport {
  std::vector<CellStats> cells;  // ordered by (planner, count)
  std::string config_hash;
  json resolved_config;

  const CellStats& cell(PlannerKind planner, int count) const;
};

CellStats aggregate(PlannerKind planner, int count, std::span<const TrialResult> trials,
                    int resamples, std::uint64_t seed);

/// Runs every (count, seed, planner) trial, in parallel when threads > 1,
/// and aggregates per planner and count. Identical configs give identical
/// reports regardless of thread count.
BatchReport run_benchmark(const BenchmarkConfig& config,
                          std::vector<TrialResult>* all_trials = nullptr);

std::string fnv1a_hex(const std::string& text);

/// Table with one row per (metric, planner) and one column per count.
std::string report_table_csv(const BatchReport& report);
/// One row per cell with every aggregate, including bootstrap intervals.
std::string report_cells_csv(const BatchReport& report);

/// `# ` prefixed lines carrying the resolved configuration.
std::string config_comment_block(const json& config);

}  // namespace comet
