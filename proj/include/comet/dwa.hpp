#pragma once

#include <optional>
#include <span>

#include "comet/navigation.hpp"
#include "comet/world.hpp"

namespace comet {

/// What the local planner can collide with: discs at pedestrian positions
/// and, optionally, the two corridor walls y = +-halfwidth. When velocities
/// are given (one per obstacle) the discs move at constant velocity during
/// the rollout; otherwise they are static.
struct DwaWorld {
  std::span<const Vec2> obstacles;
  std::span<const Vec2> velocities;
  double obstacle_radius = 0.25;
  std::optional<double> corridor_halfwidth;
};

struct DwaCommand {
  double v = 0.0;
  double omega = 0.0;
  bool freeze = false;
  double score = 0.0;
};

/// Forward-simulates (v, omega) for cfg.horizon and scores it, or returns
/// nullopt when the rollout runs into an obstacle or wall. A rollout that
/// starts in contact is only rejected if it makes the contact deeper. The
/// heading term is the end pose's alignment with the target, or full marks
/// when the rollout passes within cfg.arrival_radius of it.
std::optional<double> dwa_evaluate(const RobotState& robot, double v, double omega, Vec2 target,
                                   const DwaWorld& world, const DwaConfig& cfg);

/// Dynamic window approach. Samples forward speeds and turn rates reachable
/// within one control period `dt`, keeps non-colliding rollouts, and returns
/// the best. When every forward sample collides the command is (0, 0) with
/// the freeze flag set.
DwaCommand dwa_plan(const RobotState& robot, Vec2 target, const DwaWorld& world,
                    const DwaConfig& cfg, const RobotConfig& limits, double dt);

}  // namespace comet
