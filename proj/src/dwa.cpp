#include "comet/dwa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace comet {

namespace {

struct Pose {
  Vec2 p;
  double theta;
};

Pose advance(Pose s, double v, double omega, double dt) {
  if (std::abs(omega) < 1e-9) {
    s.p += Vec2{std::cos(s.theta), std::sin(s.theta)} * (v * dt);
  } else {
    const double r = v / omega;
    const double next = s.theta + omega * dt;
    s.p += Vec2{r * (std::sin(next) - std::sin(s.theta)), -r * (std::cos(next) - std::cos(s.theta))};
    s.theta = next;
  }
  return s;
}

}  // namespace

std::optional<double> dwa_evaluate(const RobotState& robot, double v, double omega, Vec2 target,
                                   const DwaWorld& world, const DwaConfig& cfg) {
  const double contact = robot.radius + world.obstacle_radius;
  const auto& obs = world.obstacles;
  const bool moving = !world.velocities.empty();
  auto obstacle_at = [&](std::size_t i, double t) {
    return moving ? obs[i] + world.velocities[i] * t : obs[i];
  };

  std::vector<double> start(obs.size());
  for (std::size_t i = 0; i < obs.size(); ++i) start[i] = distance(robot.position, obs[i]) - contact;
  auto wall_gap = [&](Vec2 p) {
    return world.corridor_halfwidth ? *world.corridor_halfwidth - std::abs(p.y) - robot.radius
                                    : std::numeric_limits<double>::infinity();
  };
  const double wall_start = wall_gap(robot.position);

  double clearance = std::numeric_limits<double>::infinity();
  bool arrives = distance(robot.position, target) <= cfg.arrival_radius;
  Pose s{robot.position, robot.heading};
  const int n = std::max(1, static_cast<int>(std::lround(cfg.horizon / cfg.rollout_dt)));
  for (int k = 0; k < n; ++k) {
    s = advance(s, v, omega, cfg.rollout_dt);
    const double t = cfg.rollout_dt * (k + 1);
    for (std::size_t i = 0; i < obs.size(); ++i) {
      const double gap = distance(s.p, obstacle_at(i, t)) - contact;
      if (gap < 0.0 && gap < start[i] - 1e-9) return std::nullopt;
      clearance = std::min(clearance, gap);
    }
    const double wg = wall_gap(s.p);
    if (wg < 0.0 && wg < wall_start - 1e-9) return std::nullopt;
    clearance = std::min(clearance, wg);
    arrives = arrives || distance(s.p, target) <= cfg.arrival_radius;
  }

  const Vec2 to_target = target - s.p;
  double heading = 1.0;
  if (!arrives && to_target.norm() > 1e-6) {
    const double err = wrap_angle(std::atan2(to_target.y, to_target.x) - s.theta);
    heading = 1.0 - std::abs(err) / std::numbers::pi;
  }
  const double clear = std::clamp(clearance, 0.0, cfg.clearance_cap) / cfg.clearance_cap;
  const double speed = robot.v_max > 0.0 ? v / robot.v_max : 0.0;
  return cfg.heading_weight * heading + cfg.clearance_weight * clear + cfg.speed_weight * speed;
}

DwaCommand dwa_plan(const RobotState& robot, Vec2 target, const DwaWorld& world,
                    const DwaConfig& cfg, const RobotConfig& limits, double dt) {
  const double v_now = robot.velocity.norm();
  const double v_lo = std::max(0.0, v_now - limits.accel * dt);
  const double v_hi = std::min(robot.v_max, v_now + limits.accel * dt);
  const double w_lo = std::max(-robot.omega_max, robot.omega - limits.omega_accel * dt);
  const double w_hi = std::min(robot.omega_max, robot.omega + limits.omega_accel * dt);

  std::vector<Vec2> nearby;
  std::vector<Vec2> nearby_velocities;
  for (std::size_t i = 0; i < world.obstacles.size(); ++i) {
    if (distance(world.obstacles[i], robot.position) > cfg.obstacle_range) continue;
    nearby.push_back(world.obstacles[i]);
    if (!world.velocities.empty()) nearby_velocities.push_back(world.velocities[i]);
  }
  DwaWorld local = world;
  local.obstacles = nearby;
  local.velocities = nearby_velocities;

  auto sample = [](double lo, double hi, int i, int n) {
    return n <= 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  };

  DwaCommand best{0.0, 0.0, true, -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < cfg.speed_samples; ++i) {
    const double v = sample(v_lo, v_hi, i, cfg.speed_samples);
    if (v <= 0.0) continue;
    for (int j = 0; j < cfg.turn_samples; ++j) {
      const double w = sample(w_lo, w_hi, j, cfg.turn_samples);
      const auto score = dwa_evaluate(robot, v, w, target, local, cfg);
      if (score && *score > best.score + 1e-12) best = {v, w, false, *score};
    }
  }
  if (best.freeze) return {0.0, 0.0, true, 0.0};
  return best;
}

}  // namespace comet
