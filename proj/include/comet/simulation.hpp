#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "comet/cohesion.hpp"
#include "comet/dwa.hpp"
#include "comet/grouping.hpp"
#include "comet/navigation.hpp"
#include "comet/sensor.hpp"
#include "comet/tracking.hpp"
#include "comet/world.hpp"

namespace comet {

struct WorldState {
  std::vector<AgentState> agents;
  RobotState robot;
  double t = 0.0;
  int collisions = 0;  // robot-pedestrian contacts that started this step or earlier
};

struct RobotCommand {
  double v = 0.0;
  double omega = 0.0;
};

WorldState initial_state(const Scenario& s);

/// Pedestrians walk straight to their goals at constant speed and stop
/// there; face positions follow. No avoidance.
void step_pedestrians(std::vector<AgentState>& agents, double dt);

/// Unicycle integration of the robot under a command clamped to its limits.
void step_robot(RobotState& robot, RobotCommand cmd, double dt);

/// Advances pedestrians and robot by dt and counts new robot-pedestrian
/// contacts (distance below the sum of radii).
WorldState step_world(const Scenario& s, WorldState state, RobotCommand cmd, double dt);

struct StepRecord {
  double t = 0.0;
  Vec2 position;
  Vec2 velocity;
  double heading = 0.0;
  double deviation = 0.0;
  bool frozen = false;
};

struct TrialResult {
  PlannerKind planner = PlannerKind::Dwa;
  std::uint64_t seed = 0;
  Vec2 start;
  Vec2 goal;
  std::vector<StepRecord> steps;
  bool reached_goal = false;
  bool froze = false;
  int freeze_flags = 0;
  int collisions = 0;
  double avg_deviation_deg = 0.0;
  double path_length = 0.0;
  std::optional<double> normalized_path_length;
};

/// Perception, grouping and deviation state carried between control steps.
class Planner {
 public:
  Planner(const Scenario& s, PlannerKind kind, std::uint64_t seed);

  struct Decision {
    RobotCommand command;
    double deviation = 0.0;
    bool frozen = false;
    bool deviation_frozen = false;  // no feasible deviation, DWA not consulted
    std::vector<Pfz> zones;
  };

  Decision plan(const WorldState& state, int step);

  /// Tracked pedestrians as the cohesion/navigation modules see them. Face
  /// poses and genders come from ground truth by id.
  std::vector<MemberObservation> observations(const WorldState& state) const;

  const std::vector<Track>& tracks() const { return tracks_; }
  void perceive(const WorldState& state, int step);

 private:
  const Scenario& scenario_;
  PlannerKind kind_;
  std::mt19937_64 rng_;
  std::vector<Track> tracks_;
};

/// Nominal velocity toward the goal: v_max, reduced so the horizon point
/// does not overshoot the goal.
Vec2 nominal_velocity(const RobotState& robot, double horizon);

/// Closed-loop trial: observe, track, group, score, plan, step until the
/// goal is within tolerance or max_steps elapse. Deterministic in
/// (scenario, planner, seed).
TrialResult run_trial(const Scenario& s, PlannerKind planner, std::uint64_t seed);

}  // namespace comet
