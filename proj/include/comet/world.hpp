#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace comet {

/// Planar vector in the robot/camera frame: X forward, Y to the left,
/// Z up, so positive angles rotate counterclockwise.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double squared_norm() const { return x * x + y * y; }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
inline constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Counterclockwise rotation by `angle` radians.
inline Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * std::numbers::pi);
  if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

inline double deg2rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / std::numbers::pi; }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr bool operator==(const Vec3&) const = default;
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

/// Face position (meters) and unit orientation vector.
struct FacePose {
  Vec3 position;
  Vec3 orientation{1.0, 0.0, 0.0};

  bool operator==(const FacePose&) const = default;
};

enum class Gender { A, B };

struct AgentState {
  int id = 0;
  Vec2 position;
  Vec2 velocity;
  std::optional<FacePose> face;
  std::optional<Gender> gender;
  Vec2 goal;

  bool operator==(const AgentState&) const = default;
};

enum class CohesionLevel { Low, Medium, High };

/// Ground-truth group annotation carried by a scenario file.
struct GroupAnnotation {
  std::vector<int> members;
  std::optional<CohesionLevel> cohesion;

  bool operator==(const GroupAnnotation&) const = default;
};

enum class CombineMode { Additive, GenderWeighted };
enum class GroupingRule { NonDivergence, DotSign };

struct SensorConfig {
  int image_width = 640;
  int image_height = 480;
  double fov = deg2rad(86.0);
  double min_range = 0.3;
  double max_range = 10.0;
  double centroid_noise_std = 1.0;  // pixels
  double depth_noise_std = 0.05;    // meters, per patch pixel
  int patch_halfwidth = 3;          // patch holds patch_halfwidth^2 samples

  bool operator==(const SensorConfig&) const = default;
};

/// Process / measurement noise of the constant-velocity tracker.
struct NoiseModel {
  double process_var = 1.0;  // (m/s^2)^2
  double meas_var = 0.01;    // m^2 per axis
  double init_pos_var = 0.1;
  double init_vel_var = 1.0;
  int max_age = 5;  // steps a track survives without a detection

  bool operator==(const NoiseModel&) const = default;
};

struct NavParams {
  double sense_radius = 5.0;
  double approach_angle = deg2rad(100.0);
  double angle_step = deg2rad(1.0);
  double pedestrian_radius = 0.25;

  bool operator==(const NavParams&) const = default;
};

struct DwaConfig {
  double heading_weight = 1.0;
  double clearance_weight = 0.3;
  double speed_weight = 0.2;
  double horizon = 3.0;       // seconds of forward simulation, t_h by default
  double rollout_dt = 0.2;
  double clearance_cap = 2.0; // meters; clearance term saturates here
  int speed_samples = 7;
  int turn_samples = 15;
  double obstacle_range = 6.0;
  bool predict_obstacles = true;  // move obstacle discs at their current velocity in rollouts
  double arrival_radius = 0.2;    // a rollout passing this close to the target counts as aligned

  bool operator==(const DwaConfig&) const = default;
};

struct RobotConfig {
  double radius = 0.25;
  double v_max = 1.0;
  double omega_max = 1.5;
  double accel = 2.0;
  double omega_accel = 6.0;

  bool operator==(const RobotConfig&) const = default;
};

struct FreezeRule {
  double speed = 0.05;   // m/s
  double duration = 3.0; // s

  bool operator==(const FreezeRule&) const = default;
};

/// Every tunable of the pipeline. Defaults are the documented project
/// defaults and are written into every output file.
struct ParamSet {
  double proximity_weight = 1.0;
  double speed_weight = 1.0;
  double size_weight = 1.0;
  double interaction_weight = 1.0;
  double gender_weight = 1.5;
  double group_distance = 2.0;  // grouping threshold, meters
  double static_boost = 10.0;   // walking-speed score of a static group, unweighted
  double tau_low = 5.0;
  double tau_high = 8.0;
  double horizon = 3.0;         // prediction horizon t_h, seconds
  CombineMode combine_mode = CombineMode::Additive;
  double d_clamp = 0.05;
  GroupingRule grouping_rule = GroupingRule::NonDivergence;
  double static_speed = 0.05;
  double face_toward_probability = 0.7;
  double max_pedestrian_speed = 2.5;

  NavParams nav;
  NoiseModel tracking;
  DwaConfig dwa;
  RobotConfig robot;
  FreezeRule freeze;

  bool operator==(const ParamSet&) const = default;
};

struct Scenario {
  std::vector<AgentState> agents;
  std::vector<GroupAnnotation> groups_truth;
  Vec2 robot_start;
  Vec2 robot_goal{10.0, 0.0};
  double robot_heading = 0.0;
  std::optional<double> corridor_halfwidth;
  double dt = 0.1;
  int max_steps = 600;
  double goal_tolerance = 0.3;
  SensorConfig sensor;
  ParamSet params;

  bool operator==(const Scenario&) const = default;
};

/// Empty result means the scenario is valid.
std::vector<std::string> validate_scenario(const Scenario& s);

std::string to_string(CohesionLevel level);
std::optional<CohesionLevel> cohesion_level_from_string(const std::string& s);

}  // namespace comet
