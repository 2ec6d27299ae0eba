#pragma once

#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "comet/world.hpp"

namespace comet {

/// Simulated RGB-D detection: bounding-box centroid in pixels plus the depth
/// values of the square patch centered on it. Invalid depth pixels are 0,
/// as reported by real depth cameras with no return.
struct Detection {
  int id = 0;
  double x_cen = 0.0;
  double y_cen = 0.0;
  std::vector<double> depth_patch;
};

struct Pose2 {
  Vec2 position;
  double heading = 0.0;
};

class RangeUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pixel column of the image center offset by a bearing; the exact inverse of
/// angular_displacement.
double bearing_to_column(double bearing, int width, double fov);

/// Renders agents visible from `robot` into detections. Agents outside
/// +-fov/2 or the sensor's depth range are omitted; so are agents whose
/// noisy centroid lands outside the image.
std::vector<Detection> observe(std::span<const AgentState> agents, const Pose2& robot,
                               const SensorConfig& cfg, std::mt19937_64& rng);

/// Mean of the valid pixels of the detection's depth patch.
double depth_estimate(const Detection& d);

/// psi = ((w/2 - x_cen) / w) * fov. Linear pixel-to-angle model.
double angular_displacement(double x_cen, int width, double fov);

/// Camera-frame position at range `d` and bearing `psi`.
Vec2 localize(double d, double psi);

inline double pairwise_distance(Vec2 a, Vec2 b) { return distance(a, b); }

Vec2 camera_to_world(const Pose2& robot, Vec2 p);
Vec2 world_to_camera(const Pose2& robot, Vec2 p);

struct Measurement {
  int id = 0;
  Vec2 position;  // world frame
};

/// depth_estimate -> angular_displacement -> localize -> world frame for
/// every detection; detections whose patch has no valid pixel are skipped.
std::vector<Measurement> localize_detections(std::span<const Detection> detections,
                                             const Pose2& robot, const SensorConfig& cfg);

}  // namespace comet
