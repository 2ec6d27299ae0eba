#include "comet/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "comet/metrics.hpp"

namespace comet {

WorldState initial_state(const Scenario& s) {
  WorldState w;
  w.agents = s.agents;
  w.robot.position = s.robot_start;
  w.robot.heading = s.robot_heading;
  w.robot.goal = s.robot_goal;
  w.robot.v_max = s.params.robot.v_max;
  w.robot.omega_max = s.params.robot.omega_max;
  w.robot.radius = s.params.robot.radius;
  return w;
}

void step_pedestrians(std::vector<AgentState>& agents, double dt) {
  for (auto& a : agents) {
    const Vec2 to_goal = a.goal - a.position;
    const double remaining = to_goal.norm();
    const double speed = a.velocity.norm();
    Vec2 moved;
    if (remaining <= speed * dt || remaining == 0.0) {
      moved = to_goal;
      a.position = a.goal;
      a.velocity = {};
    } else {
      a.velocity = to_goal * (speed / remaining);
      moved = a.velocity * dt;
      a.position += moved;
    }
    if (a.face) {
      a.face->position.x += moved.x;
      a.face->position.y += moved.y;
    }
  }
}

void step_robot(RobotState& robot, RobotCommand cmd, double dt) {
  const double v = std::clamp(cmd.v, 0.0, robot.v_max);
  const double w = std::clamp(cmd.omega, -robot.omega_max, robot.omega_max);
  if (std::abs(w) < 1e-9) {
    robot.position += Vec2{std::cos(robot.heading), std::sin(robot.heading)} * (v * dt);
  } else {
    const double next = robot.heading + w * dt;
    const double r = v / w;
    robot.position += Vec2{r * (std::sin(next) - std::sin(robot.heading)),
                           -r * (std::cos(next) - std::cos(robot.heading))};
    robot.heading = next;
  }
  robot.heading = wrap_angle(robot.heading);
  robot.velocity = Vec2{std::cos(robot.heading), std::sin(robot.heading)} * v;
  robot.omega = w;
}

WorldState step_world(const Scenario& s, WorldState state, RobotCommand cmd, double dt) {
  std::set<int> before;
  const double contact = s.params.robot.radius + s.params.nav.pedestrian_radius;
  for (const auto& a : state.agents) {
    if (distance(a.position, state.robot.position) < contact) before.insert(a.id);
  }
  step_pedestrians(state.agents, dt);
  step_robot(state.robot, cmd, dt);
  for (const auto& a : state.agents) {
    if (distance(a.position, state.robot.position) < contact && !before.count(a.id)) {
      ++state.collisions;
    }
  }
  state.t += dt;
  return state;
}

Vec2 nominal_velocity(const RobotState& robot, double horizon) {
  const Vec2 to_goal = robot.goal - robot.position;
  const double dist = to_goal.norm();
  if (dist == 0.0) return {};
  const double speed = std::min(robot.v_max, dist / horizon);
  return to_goal * (speed / dist);
}

Planner::Planner(const Scenario& s, PlannerKind kind, std::uint64_t seed)
    : scenario_(s), kind_(kind), rng_(seed) {}

void Planner::perceive(const WorldState& state, int step) {
  const Pose2 pose{state.robot.position, state.robot.heading};
  const auto detections = observe(state.agents, pose, scenario_.sensor, rng_);
  const auto measurements = localize_detections(detections, pose, scenario_.sensor);
  tracks_ = step_tracks(tracks_, measurements, step, scenario_.dt, scenario_.params.tracking);
}

std::vector<MemberObservation> Planner::observations(const WorldState& state) const {
  std::vector<MemberObservation> out;
  out.reserve(tracks_.size());
  for (const auto& t : tracks_) {
    MemberObservation m{t.id, t.position(), t.velocity(), std::nullopt, std::nullopt};
    auto it = std::find_if(state.agents.begin(), state.agents.end(),
                           [&](const AgentState& a) { return a.id == t.id; });
    if (it != state.agents.end()) {
      m.face = it->face;
      m.gender = it->gender;
    }
    out.push_back(std::move(m));
  }
  return out;
}

Planner::Decision Planner::plan(const WorldState& state, int step) {
  const auto& p = scenario_.params;
  const RobotState& robot = state.robot;
  Decision d;

  PointPredicate inside_walls;
  if (scenario_.corridor_halfwidth) {
    const double limit = *scenario_.corridor_halfwidth - robot.radius;
    inside_walls = [limit](Vec2 q) { return std::abs(q.y) <= limit; };
  }

  RobotState nominal = robot;
  nominal.velocity = nominal_velocity(robot, p.horizon);

  if (kind_ != PlannerKind::Dwa && nominal.velocity.squared_norm() > 0.0) {
    perceive(state, step);
    const auto peds = observations(state);
    const auto fopt = freezing_options(p);

    if (kind_ == PlannerKind::Comet) {
      const auto groups = partition_groups(tracks_, grouping_options(p));
      for (const auto& g : potentially_freezing(groups, peds, robot, fopt)) {
        const auto members = group_members(g, peds);
        const auto predicted = predict_group_positions(members, p.horizon);
        d.zones.push_back(build_pfz(predicted, g.id, score_group(members, peds, p), robot.radius));
      }
      const auto dev = comet_deviation(nominal, d.zones, p.horizon, p.nav.angle_step, inside_walls);
      d.deviation = dev.angle;
      d.frozen = dev.frozen;
    } else {
      std::vector<Group> singles;
      for (const auto& m : peds) singles.push_back({m.id, {m.id}, m.velocity});
      const auto pf = potentially_freezing(singles, peds, robot, fopt);
      if (!pf.empty()) {
        std::vector<MemberObservation> pf_peds;
        for (const auto& g : pf) {
          auto members = group_members(g, peds);
          pf_peds.insert(pf_peds.end(), members.begin(), members.end());
        }
        const auto nearest = std::min_element(
            pf_peds.begin(), pf_peds.end(), [&](const auto& a, const auto& b) {
              return distance(a.position, robot.position) < distance(b.position, robot.position);
            });
        d.zones.push_back(frozone_pfz(pf_peds, p.horizon, robot.radius));
        const auto dev = frozone_deviation(nominal, d.zones.front(), nearest->position, p.horizon,
                                           p.nav.angle_step, inside_walls);
        d.deviation = dev.angle;
        d.frozen = dev.frozen;
      }
    }
  }

  if (d.frozen) {
    d.deviation_frozen = true;
    d.command = {0.0, 0.0};
    return d;
  }

  const Vec2 target =
      kind_ == PlannerKind::Dwa
          ? robot.goal
          : robot.position + rotate(nominal.velocity, d.deviation) * p.horizon;

  std::vector<Vec2> obstacles;
  std::vector<Vec2> velocities;
  obstacles.reserve(state.agents.size());
  for (const auto& a : state.agents) {
    obstacles.push_back(a.position);
    velocities.push_back(a.velocity);
  }
  const DwaWorld world{obstacles, p.dwa.predict_obstacles ? std::span<const Vec2>(velocities)
                                                          : std::span<const Vec2>(),
                       p.nav.pedestrian_radius, scenario_.corridor_halfwidth};
  const auto cmd = dwa_plan(robot, target, world, p.dwa, p.robot, scenario_.dt);
  d.command = {cmd.v, cmd.omega};
  d.frozen = cmd.freeze;
  return d;
}

TrialResult run_trial(const Scenario& s, PlannerKind planner, std::uint64_t seed) {
  TrialResult r;
  r.planner = planner;
  r.seed = seed;
  r.start = s.robot_start;
  r.goal = s.robot_goal;

  WorldState state = initial_state(s);
  Planner brain(s, planner, seed);

  for (int step = 0; step < s.max_steps; ++step) {
    if (distance(state.robot.position, s.robot_goal) <= s.goal_tolerance) break;
    const auto decision = brain.plan(state, step);
    state = step_world(s, std::move(state), decision.command, s.dt);
    r.steps.push_back({state.t, state.robot.position, state.robot.velocity, state.robot.heading,
                       decision.deviation, decision.frozen});
    if (decision.frozen) ++r.freeze_flags;
  }

  r.reached_goal = distance(state.robot.position, s.robot_goal) <= s.goal_tolerance;
  r.collisions = state.collisions;
  r.froze = detect_freeze(r.steps, s.dt, s.params.freeze);
  r.avg_deviation_deg = metric_avg_deviation(r.steps, r.start, r.goal);
  r.path_length = path_length(r.steps, r.start);
  r.normalized_path_length =
      metric_normalized_path_length(r.steps, r.start, r.goal, r.reached_goal);
  return r;
}

}  // namespace comet
