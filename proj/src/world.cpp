#include "comet/world.hpp"

#include <set>

namespace comet {

namespace {

void check(std::vector<std::string>& errors, bool ok, const std::string& message) {
  if (!ok) errors.push_back(message);
}

bool finite_and_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> errors;

  std::set<int> seen;
  std::set<int> reported;
  for (const auto& a : s.agents) {
    if (!seen.insert(a.id).second && reported.insert(a.id).second) {
      errors.push_back("duplicate id " + std::to_string(a.id));
    }
    const std::string tag = "agent " + std::to_string(a.id);
    check(errors, a.position.finite(), tag + ": position must be finite");
    check(errors, a.velocity.finite(), tag + ": velocity must be finite");
    check(errors, a.goal.finite(), tag + ": goal must be finite");
    check(errors, a.velocity.norm() <= s.params.max_pedestrian_speed,
          tag + ": speed exceeds max_pedestrian_speed");
    if (a.face) {
      check(errors, std::abs(a.face->orientation.norm() - 1.0) <= 1e-9,
            tag + ": face orientation must be a unit vector");
    }
  }

  for (const auto& g : s.groups_truth) {
    for (int id : g.members) {
      check(errors, seen.count(id) == 1,
            "group annotation references unknown id " + std::to_string(id));
    }
  }

  check(errors, s.dt > 0.0 && std::isfinite(s.dt), "dt must be positive");
  check(errors, s.max_steps > 0, "max_steps must be positive");
  check(errors, s.robot_start.finite() && s.robot_goal.finite(),
        "robot start and goal must be finite");
  check(errors, !(s.robot_start == s.robot_goal), "robot start and goal coincide");
  check(errors, finite_and_positive(s.goal_tolerance), "goal_tolerance must be positive");
  if (s.corridor_halfwidth) {
    check(errors, finite_and_positive(*s.corridor_halfwidth),
          "corridor_halfwidth must be positive");
  }

  const auto& p = s.params;
  check(errors, finite_and_positive(p.group_distance), "group_distance must be positive");
  check(errors, finite_and_positive(p.static_boost), "static_boost must be positive");
  check(errors, p.tau_low < p.tau_high, "tau_low must be below tau_high");
  check(errors, finite_and_positive(p.horizon), "horizon must be positive");
  check(errors, finite_and_positive(p.d_clamp), "d_clamp must be positive");
  check(errors, finite_and_positive(p.nav.angle_step), "nav.angle_step must be positive");
  check(errors, p.tracking.process_var > 0.0 && p.tracking.meas_var > 0.0 &&
                    p.tracking.init_pos_var > 0.0 && p.tracking.init_vel_var > 0.0,
        "tracking variances must be positive");
  check(errors, finite_and_positive(p.robot.v_max) && finite_and_positive(p.robot.omega_max),
        "robot limits must be positive");

  const auto& c = s.sensor;
  check(errors, c.image_width > 0 && c.image_height > 0, "image size must be positive");
  check(errors, c.fov > 0.0 && c.fov <= std::numbers::pi, "fov must lie in (0, pi]");
  check(errors, c.min_range > 0.0 && c.min_range < c.max_range,
        "sensor range must satisfy 0 < min_range < max_range");
  check(errors, c.centroid_noise_std >= 0.0 && c.depth_noise_std >= 0.0,
        "sensor noise must be non-negative");
  check(errors, c.patch_halfwidth > 0, "patch_halfwidth must be positive");

  return errors;
}

std::string to_string(CohesionLevel level) {
  switch (level) {
    case CohesionLevel::Low: return "low";
    case CohesionLevel::Medium: return "medium";
    case CohesionLevel::High: return "high";
  }
  return "unknown";
}

std::optional<CohesionLevel> cohesion_level_from_string(const std::string& s) {
  if (s == "low") return CohesionLevel::Low;
  if (s == "medium") return CohesionLevel::Medium;
  if (s == "high") return CohesionLevel::High;
  return std::nullopt;
}

}  // namespace comet
