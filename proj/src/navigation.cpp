#include "comet/navigation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace comet {

std::string to_string(PlannerKind k) {
  switch (k) {
    case PlannerKind::Dwa: return "dwa";
    case PlannerKind::Frozone: return "frozone";
    case PlannerKind::Comet: return "comet";
  }
  return "unknown";
}

std::optional<PlannerKind> planner_from_string(const std::string& s) {
  if (s == "dwa") return PlannerKind::Dwa;
  if (s == "frozone") return PlannerKind::Frozone;
  if (s == "comet") return PlannerKind::Comet;
  return std::nullopt;
}

FreezingOptions freezing_options(const ParamSet& p) {
  return {p.horizon, p.nav.sense_radius, p.nav.approach_angle, p.static_speed};
}

std::vector<MemberObservation> group_members(const Group& group,
                                             std::span<const MemberObservation> pedestrians) {
  std::vector<MemberObservation> out;
  out.reserve(group.members.size());
  for (int id : group.members) {
    auto it = std::find_if(pedestrians.begin(), pedestrians.end(),
                           [id](const MemberObservation& m) { return m.id == id; });
    if (it != pedestrians.end()) out.push_back(*it);
  }
  return out;
}

namespace {

Vec2 mean_velocity(std::span<const MemberObservation> members) {
  Vec2 v;
  for (const auto& m : members) v += m.velocity;
  return members.empty() ? v : v / static_cast<double>(members.size());
}

Vec2 centroid(std::span<const MemberObservation> members) {
  Vec2 c;
  for (const auto& m : members) c += m.position;
  return members.empty() ? c : c / static_cast<double>(members.size());
}

double angle_between(Vec2 a, Vec2 b) { return std::abs(std::atan2(cross(a, b), dot(a, b))); }

}  // namespace

std::vector<Group> potentially_freezing(std::span<const Group> groups,
                                        std::span<const MemberObservation> pedestrians,
                                        const RobotState& robot, const FreezingOptions& opt) {
  const Vec2 forward{std::cos(robot.heading), std::sin(robot.heading)};
  std::vector<Group> out;
  for (const auto& g : groups) {
    const auto members = group_members(g, pedestrians);
    if (members.empty()) continue;
    const Vec2 now = centroid(members);
    const Vec2 v = mean_velocity(members);
    const Vec2 ahead = now + v * opt.horizon - robot.position;
    if (ahead.norm() > opt.sense_radius || dot(ahead, forward) < 0.0) continue;

    const Vec2 relative = v - robot.velocity;
    const bool approaching =
        v.norm() < opt.static_speed || relative.norm() < opt.static_speed ||
        angle_between(relative, robot.position - now) < opt.approach_angle;
    if (approaching) out.push_back(g);
  }
  return out;
}

std::vector<Vec2> predict_group_positions(std::span<const MemberObservation> members,
                                          double horizon) {
  const Vec2 shift = mean_velocity(members) * horizon;
  std::vector<Vec2> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.position + shift);
  return out;
}

Pfz build_pfz(std::span<const Vec2> predicted, int group_id, const CohesionBreakdown& cohesion,
              double robot_radius) {
  Pfz z;
  z.hull = convex_hull(predicted);
  z.margin = robot_radius;
  z.group_id = group_id;
  z.group_size = predicted.size();
  z.cohesion = cohesion;
  return z;
}

Pfz frozone_pfz(std::span<const MemberObservation> pf_pedestrians, double horizon,
                double robot_radius) {
  std::vector<Vec2> predicted;
  predicted.reserve(pf_pedestrians.size());
  for (const auto& p : pf_pedestrians) predicted.push_back(p.position + p.velocity * horizon);
  Pfz z;
  z.hull = convex_hull(predicted);
  z.margin = robot_radius;
  z.group_id = -1;
  z.group_size = predicted.size();
  return z;
}

Vec2 horizon_point(const RobotState& robot, double angle, double horizon) {
  return robot.position + rotate(robot.velocity, angle) * horizon;
}

std::optional<double> deviation_search(const RobotState& robot, const PointPredicate& feasible,
                                       double horizon, double step) {
  if (robot.velocity.squared_norm() == 0.0) {
    throw std::invalid_argument("deviation_search: robot velocity is zero");
  }
  if (!(step > 0.0)) throw std::invalid_argument("deviation_search: step must be positive");

  const double pi = std::numbers::pi;
  const long steps = std::lround(std::floor(pi / step + 1e-9));
  const bool reaches_pi = std::abs(steps * step - pi) < 1e-9;

  std::optional<double> best;
  double best_dist = std::numeric_limits<double>::infinity();
  auto consider = [&](double angle) {
    const Vec2 c = horizon_point(robot, angle, horizon);
    if (!feasible(c)) return;
    const double d = distance(c, robot.goal);
    if (d < best_dist - 1e-12) {
      best_dist = d;
      best = angle;
    }
  };

  consider(0.0);
  for (long k = 1; k <= steps; ++k) {
    const double a = reaches_pi && k == steps ? pi : k * step;
    consider(a);
    if (!(reaches_pi && k == steps)) consider(-a);
  }
  return best;
}

namespace {

bool admitted(const PointPredicate& admissible, Vec2 p) { return !admissible || admissible(p); }

}  // namespace

DeviationResult comet_deviation(const RobotState& robot, std::span<const Pfz> pfzs,
                                double horizon, double step, const PointPredicate& admissible) {
  auto outside_all = [&](Vec2 p) {
    return std::none_of(pfzs.begin(), pfzs.end(), [p](const Pfz& z) { return z.contains(p); });
  };
  auto clear = [&](Vec2 p) { return admitted(admissible, p) && outside_all(p); };

  if (clear(horizon_point(robot, 0.0, horizon))) return {0.0, false, 0};
  if (auto phi = deviation_search(robot, clear, horizon, step)) return {*phi, false, 1};

  const Pfz* weakest = nullptr;
  for (const auto& z : pfzs) {
    if (z.group_size < 2) continue;
    if (!weakest || z.cohesion.total < weakest->cohesion.total ||
        (z.cohesion.total == weakest->cohesion.total &&
         distance_to_hull(z.hull, robot.position) <
             distance_to_hull(weakest->hull, robot.position))) {
      weakest = &z;
    }
  }
  if (!weakest) return {0.0, true, 2};

  std::vector<Hull> others;
  for (const auto& z : pfzs) {
    if (&z != weakest) others.push_back(z.hull);
  }
  const double eps = weakest->margin + kGeometryEps;
  auto passage = [&](Vec2 p) {
    if (!admitted(admissible, p)) return false;
    return in_region_p(p, weakest->hull, others, eps) || outside_all(p);
  };
  if (auto phi = deviation_search(robot, passage, horizon, step)) return {*phi, false, 2};
  return {0.0, true, 2};
}

double bearing_from_velocity(const RobotState& robot, Vec2 target) {
  const Vec2 d = target - robot.position;
  return std::atan2(cross(robot.velocity, d), dot(robot.velocity, d));
}

DeviationResult frozone_deviation(const RobotState& robot, const Pfz& pfz_froz,
                                  Vec2 nearest_pf, double horizon, double step,
                                  const PointPredicate& admissible) {
  auto clear = [&](Vec2 p) { return admitted(admissible, p) && !pfz_froz.contains(p); };
  if (clear(horizon_point(robot, 0.0, horizon))) return {0.0, false, 0};

  const std::optional<double> phi1 = deviation_search(robot, clear, horizon, step);

  std::optional<double> phi2;
  const double bearing = bearing_from_velocity(robot, nearest_pf);
  if (bearing != 0.0 && clear(horizon_point(robot, bearing, horizon))) phi2 = bearing;

  if (phi1 && phi2) {
    return {std::abs(*phi2) < std::abs(*phi1) ? *phi2 : *phi1, false, 1};
  }
  if (phi1) return {*phi1, false, 1};
  if (phi2) return {*phi2, false, 1};
  return {0.0, true, 1};
}

}  // namespace comet
