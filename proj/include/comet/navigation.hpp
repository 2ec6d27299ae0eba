#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "comet/cohesion.hpp"
#include "comet/geometry.hpp"
#include "comet/grouping.hpp"
#include "comet/world.hpp"

namespace comet {

struct RobotState {
  Vec2 position;
  double heading = 0.0;
  Vec2 velocity;
  double omega = 0.0;
  Vec2 goal;
  double v_max = 1.0;
  double omega_max = 1.5;
  double radius = 0.25;
};

/// Potential freezing zone: the hull of predicted positions, grown by
/// `margin` (the robot radius) on every side. Membership is the exact
/// Minkowski sum of hull and disc.
struct Pfz {
  Hull hull;
  double margin = 0.0;
  int group_id = 0;
  std::size_t group_size = 1;
  CohesionBreakdown cohesion;

  bool contains(Vec2 p) const { return comet::contains(hull, p, margin + kGeometryEps); }
};

enum class PlannerKind { Dwa, Frozone, Comet };

std::string to_string(PlannerKind k);
std::optional<PlannerKind> planner_from_string(const std::string& s);

struct FreezingOptions {
  double horizon = 3.0;
  double sense_radius = 5.0;
  double approach_angle = deg2rad(100.0);
  double static_speed = 0.05;
};

FreezingOptions freezing_options(const ParamSet& p);

/// Members of `group` looked up in `pedestrians` by id.
std::vector<MemberObservation> group_members(const Group& group,
                                             std::span<const MemberObservation> pedestrians);

/// Groups whose predicted centroid at t + horizon lies in front of the robot
/// within sense_radius and whose motion relative to the robot points toward
/// it (angle below approach_angle), or which are static.
std::vector<Group> potentially_freezing(std::span<const Group> groups,
                                        std::span<const MemberObservation> pedestrians,
                                        const RobotState& robot, const FreezingOptions& opt);

/// Member positions advanced by the group's mean velocity times horizon.
std::vector<Vec2> predict_group_positions(std::span<const MemberObservation> members,
                                          double horizon);

Pfz build_pfz(std::span<const Vec2> predicted, int group_id, const CohesionBreakdown& cohesion,
              double robot_radius);

/// Single zone over every potentially freezing pedestrian, each advanced by
/// its own velocity.
Pfz frozone_pfz(std::span<const MemberObservation> pf_pedestrians, double horizon,
                double robot_radius);

using PointPredicate = std::function<bool(Vec2)>;

/// Horizon point for a velocity rotated by `angle`: robot.position + R(angle) v t_h.
Vec2 horizon_point(const RobotState& robot, double angle, double horizon);

/// Grid search over angles {0, +-step, ..., +-pi}: the feasible rotation of
/// robot.velocity whose horizon point is closest to the goal. Ties go to the
/// smaller magnitude, then to the positive angle. nullopt when no candidate
/// is feasible. Throws std::invalid_argument for a zero velocity.
std::optional<double> deviation_search(const RobotState& robot, const PointPredicate& feasible,
                                       double horizon, double step);

struct DeviationResult {
  double angle = 0.0;
  bool frozen = false;
  int phase = 0;  // 0: no deviation needed, 1: avoid all zones, 2: low-cohesion passage
};

/// Avoid every group zone; when no rotation does, pass through the
/// lowest-cohesion multi-member group's zone minus its overlaps with the
/// others. `admissible` restricts candidate points further (walls).
DeviationResult comet_deviation(const RobotState& robot, std::span<const Pfz> pfzs,
                                double horizon, double step,
                                const PointPredicate& admissible = {});

/// Smaller-magnitude of the zone-avoiding rotation and the bearing of the
/// nearest potentially freezing pedestrian. The bearing is used only when it
/// is non-zero and its horizon point lies outside the zone.
DeviationResult frozone_deviation(const RobotState& robot, const Pfz& pfz_froz,
                                  Vec2 nearest_pf, double horizon, double step,
                                  const PointPredicate& admissible = {});

/// Signed rotation taking the robot velocity direction onto the direction
/// from the robot to `target`.
double bearing_from_velocity(const RobotState& robot, Vec2 target);

}  // namespace comet
