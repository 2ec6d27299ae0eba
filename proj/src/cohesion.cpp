#include "comet/cohesion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace comet {

std::optional<double> proximity_score(std::span<const Vec2> positions, double weight,
                                      double d_clamp) {
  const std::size_t n = positions.size();
  if (n < 2) return std::nullopt;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sum += std::max(distance(positions[i], positions[j]), d_clamp);
    }
  }
  return weight * static_cast<double>(n) / sum;
}

namespace {

double mean_speed(std::span<const Vec2> velocities) {
  if (velocities.empty()) return 0.0;
  double s = 0.0;
  for (const auto& v : velocities) s += v.norm();
  return s / static_cast<double>(velocities.size());
}

}  // namespace

double walking_speed_score(std::span<const Vec2> group_velocities,
                           std::span<const Vec2> scene_velocities, double weight,
                           double static_boost, double static_speed) {
  const double group = mean_speed(group_velocities);
  const double scene = mean_speed(scene_velocities);
  if (group < static_speed || scene < static_speed) return weight * static_boost;
  return weight * std::min(scene / group, static_boost);
}

bool is_interacting(const FacePose& a, const FacePose& b) {
  const double now = (a.position - b.position).norm();
  const double ahead = ((a.position + a.orientation) - (b.position + b.orientation)).norm();
  return now > ahead;
}

std::optional<double> facing_angle(const FacePose& a, const FacePose& b) {
  const Vec2 u{a.orientation.x, a.orientation.y};
  const Vec2 w{-b.orientation.x, -b.orientation.y};
  if (u.squared_norm() == 0.0 || w.squared_norm() == 0.0) return std::nullopt;
  return std::atan2(cross(u, w), dot(u, w));
}

double interaction_pair_term(double theta) {
  if (std::abs(theta) > std::numbers::pi / 4.0) return 0.0;
  const double sign = theta < 0.0 ? -1.0 : 1.0;
  return sign / std::cos(theta);
}

std::optional<double> interaction_score(std::span<const std::optional<FacePose>> faces,
                                        double weight) {
  const auto known = std::count_if(faces.begin(), faces.end(),
                                   [](const auto& f) { return f.has_value(); });
  if (known < 2) return std::nullopt;

  double sum = 0.0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!faces[i]) continue;
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      if (!faces[j]) continue;
      if (auto theta = facing_angle(*faces[i], *faces[j])) sum += interaction_pair_term(*theta);
    }
  }
  return weight * sum / static_cast<double>(faces.size());
}

double gender_score(std::span<const std::optional<Gender>> genders, double weight) {
  if (genders.empty()) return 1.0;
  for (const auto& g : genders) {
    if (!g) return 1.0;
  }
  const Gender first = *genders.front();
  const bool mixed = std::any_of(genders.begin(), genders.end(),
                                 [first](const auto& g) { return *g != first; });
  return mixed ? weight : 1.0;
}

double total_score(const CohesionBreakdown& b, CombineMode mode) {
  if (mode == CombineMode::GenderWeighted) {
    return b.proximity + b.gender * (b.walking_speed + b.size) + b.interaction;
  }
  return b.proximity + b.walking_speed + b.size + b.interaction;
}

CohesionLevel classify(double total, double tau_low, double tau_high) {
  if (total < tau_low) return CohesionLevel::Low;
  if (total < tau_high) return CohesionLevel::Medium;
  return CohesionLevel::High;
}

CohesionBreakdown score_group(std::span<const MemberObservation> members,
                              std::span<const MemberObservation> scene, const ParamSet& p) {
  std::vector<Vec2> positions;
  std::vector<Vec2> velocities;
  std::vector<std::optional<FacePose>> faces;
  std::vector<std::optional<Gender>> genders;
  // the pair term is antisymmetric in (i, j), so pairs are taken in id order
  std::vector<MemberObservation> ordered(members.begin(), members.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const MemberObservation& a, const MemberObservation& b) { return a.id < b.id; });
  for (const auto& m : ordered) {
    positions.push_back(m.position);
    velocities.push_back(m.velocity);
    faces.push_back(m.face);
    genders.push_back(m.gender);
  }
  std::vector<Vec2> scene_velocities;
  scene_velocities.reserve(scene.size());
  for (const auto& m : scene) scene_velocities.push_back(m.velocity);

  CohesionBreakdown b;
  auto mark = [&b](Feature f) { b.features_present.set(static_cast<std::size_t>(f)); };

  if (auto cp = proximity_score(positions, p.proximity_weight, p.d_clamp)) {
    b.proximity = *cp;
    mark(Feature::Proximity);
  }
  if (!members.empty()) {
    b.walking_speed = walking_speed_score(velocities, scene_velocities, p.speed_weight,
                                          p.static_boost, p.static_speed);
    mark(Feature::Speed);
    b.size = group_size_score(members.size(), p.size_weight);
    mark(Feature::Size);
  }
  if (auto ci = interaction_score(faces, p.interaction_weight)) {
    b.interaction = *ci;
    mark(Feature::Interaction);
  }
  if (p.combine_mode == CombineMode::GenderWeighted && !genders.empty() &&
      std::all_of(genders.begin(), genders.end(), [](const auto& g) { return g.has_value(); })) {
    b.gender = gender_score(genders, p.gender_weight);
    mark(Feature::Gender);
  }
  b.total = total_score(b, p.combine_mode);
  b.level = classify(b.total, p.tau_low, p.tau_high);
  return b;
}

CohesionBounds cohesion_bounds(std::size_t n, const ParamSet& p) {
  const double nn = static_cast<double>(n);
  const double pairs = nn * (nn - 1.0) / 2.0;
  CohesionBounds b{};
  b.proximity_max = n >= 2 ? p.proximity_weight * nn / (pairs * p.d_clamp) : 0.0;
  b.walking_speed_max = p.speed_weight * p.static_boost;
  b.size = p.size_weight * nn;
  b.interaction_abs_max = n >= 2 ? std::sqrt(2.0) * std::abs(p.interaction_weight) * (nn - 1.0) / 2.0 : 0.0;
  const double gender_max =
      p.combine_mode == CombineMode::GenderWeighted ? std::max(1.0, p.gender_weight) : 1.0;
  b.total_abs_max = b.proximity_max + gender_max * (b.walking_speed_max + b.size) +
                    b.interaction_abs_max;
  return b;
}

}  // namespace comet
