#include "comet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace comet {

double metric_avg_deviation(std::span<const StepRecord> steps, Vec2 start, Vec2 goal) {
  const Vec2 line = goal - start;
  double sum = 0.0;
  int moving = 0;
  for (const auto& s : steps) {
    if (s.velocity.norm() <= 1e-9) continue;
    sum += std::abs(std::atan2(cross(line, s.velocity), dot(line, s.velocity)));
    ++moving;
  }
  return moving == 0 ? 0.0 : rad2deg(sum / moving);
}

bool detect_freeze(std::span<const StepRecord> steps, double dt, const FreezeRule& rule) {
  int run = 0;
  const int needed = static_cast<int>(std::ceil(rule.duration / dt - 1e-9));
  for (const auto& s : steps) {
    if (s.frozen) return true;
    run = s.velocity.norm() < rule.speed ? run + 1 : 0;
    if (run >= needed) return true;
  }
  return false;
}

double metric_freezing_rate(std::span<const TrialResult> results) {
  if (results.empty()) return 0.0;
  const auto frozen = std::count_if(results.begin(), results.end(),
                                    [](const TrialResult& r) { return r.froze; });
  return static_cast<double>(frozen) / static_cast<double>(results.size());
}

double path_length(std::span<const StepRecord> steps, Vec2 start) {
  double len = 0.0;
  Vec2 prev = start;
  for (const auto& s : steps) {
    len += distance(prev, s.position);
    prev = s.position;
  }
  return len;
}

std::optional<double> metric_normalized_path_length(std::span<const StepRecord> steps,
                                                    Vec2 start, Vec2 goal, bool reached_goal) {
  if (!reached_goal) return std::nullopt;
  return path_length(steps, start) / distance(start, goal);
}

Interval bootstrap_rate_interval(const std::vector<bool>& outcomes, int resamples,
                                 std::uint64_t seed) {
  if (outcomes.empty()) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, outcomes.size() - 1);
  std::vector<double> means;
  means.reserve(resamples);
  for (int b = 0; b < resamples; ++b) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) hits += outcomes[pick(rng)] ? 1 : 0;
    means.push_back(static_cast<double>(hits) / static_cast<double>(outcomes.size()));
  }
  std::sort(means.begin(), means.end());
  auto at = [&](double q) {
    const auto idx = static_cast<std::size_t>(std::floor(q * (means.size() - 1)));
    return means[idx];
  };
  return {at(0.025), at(0.975)};
}

}  // namespace comet
