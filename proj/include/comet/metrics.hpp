#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "comet/simulation.hpp"

namespace comet {

/// Mean unsigned angle (degrees) between the robot velocity and the
/// start-to-goal direction, over steps where the robot moved. 0 when it
/// never moved.
double metric_avg_deviation(std::span<const StepRecord> steps, Vec2 start, Vec2 goal);

/// Planner freeze flag at any step, or speed below rule.speed for at least
/// rule.duration seconds in a row.
bool detect_freeze(std::span<const StepRecord> steps, double dt, const FreezeRule& rule);

double metric_freezing_rate(std::span<const TrialResult> results);

/// Polyline length from start through every logged position.
double path_length(std::span<const StepRecord> steps, Vec2 start);

/// path_length / |goal - start|; nullopt when the goal was not reached.
std::optional<double> metric_normalized_path_length(std::span<const StepRecord> steps,
                                                    Vec2 start, Vec2 goal, bool reached_goal);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Percentile bootstrap 95% interval of the mean of 0/1 outcomes.
Interval bootstrap_rate_interval(const std::vector<bool>& outcomes, int resamples,
                                 std::uint64_t seed);

}  // namespace comet
