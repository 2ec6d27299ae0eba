#pragma once

#include <bitset>
#include <optional>
#include <span>
#include <vector>

#include "comet/grouping.hpp"
#include "comet/world.hpp"

namespace comet {

enum class Feature : std::size_t { Proximity = 0, Speed, Size, Interaction, Gender };

/// Per-group cohesion components. Absent features contribute 0, except the
/// gender factor, which is neutral at 1.
struct CohesionBreakdown {
  double proximity = 0.0;
  double walking_speed = 0.0;
  double size = 0.0;
  double interaction = 0.0;
  double gender = 1.0;
  double total = 0.0;
  CohesionLevel level = CohesionLevel::Low;
  std::bitset<5> features_present;

  bool has(Feature f) const { return features_present.test(static_cast<std::size_t>(f)); }
};

/// What the cohesion model sees of one tracked pedestrian.
struct MemberObservation {
  int id = 0;
  Vec2 position;
  Vec2 velocity;
  std::optional<FacePose> face;
  std::optional<Gender> gender;
};

/// weight * n / sum over unordered pairs of max(dist, d_clamp).
/// nullopt for fewer than two members.
std::optional<double> proximity_score(std::span<const Vec2> positions, double weight,
                                      double d_clamp);

/// Scene mean speed over group mean speed, capped at static_boost. A static
/// group (mean speed below static_speed) or a static scene scores
/// weight * static_boost.
double walking_speed_score(std::span<const Vec2> group_velocities,
                           std::span<const Vec2> scene_velocities, double weight,
                           double static_boost, double static_speed);

inline double group_size_score(std::size_t n, double weight) {
  return weight * static_cast<double>(n);
}

/// Faces point toward each other: the gap between the extrapolated face
/// points is strictly smaller than the gap between the faces.
bool is_interacting(const FacePose& a, const FacePose& b);

/// Signed X-Y plane angle from a's orientation to the reverse of b's. Zero
/// when the two faces look straight at each other. nullopt when either
/// orientation has no planar component.
std::optional<double> facing_angle(const FacePose& a, const FacePose& b);

/// One pair's contribution to the interaction score: sign(theta)/cos(theta)
/// inside |theta| <= pi/4 (sign(0) = +1), zero outside.
double interaction_pair_term(double theta);

/// weight / n * sum of pair terms over unordered pairs with both faces known.
/// nullopt when fewer than two faces are available.
std::optional<double> interaction_score(std::span<const std::optional<FacePose>> faces,
                                        double weight);

/// 1 for a single-gender group, weight for a mixed one, 1 when any gender is
/// unknown.
double gender_score(std::span<const std::optional<Gender>> genders, double weight);

double total_score(const CohesionBreakdown& b, CombineMode mode);

CohesionLevel classify(double total, double tau_low, double tau_high);

/// Full breakdown for one group. `scene` holds every tracked pedestrian in
/// the frame (for the walking-speed normalisation).
CohesionBreakdown score_group(std::span<const MemberObservation> members,
                              std::span<const MemberObservation> scene, const ParamSet& p);

/// Upper bounds implied by the clamp and cap rules, for a group of n.
struct CohesionBounds {
  double proximity_max;
  double walking_speed_max;
  double size;
  double interaction_abs_max;
  double total_abs_max;
};

CohesionBounds cohesion_bounds(std::size_t n, const ParamSet& p);

}  // namespace comet
