#include "comet/sensor.hpp"

#include <cmath>

namespace comet {

double bearing_to_column(double bearing, int width, double fov) {
  const double w = static_cast<double>(width);
  return w / 2.0 - (bearing / fov) * w;
}

std::vector<Detection> observe(std::span<const AgentState> agents, const Pose2& robot,
                               const SensorConfig& cfg, std::mt19937_64& rng) {
  std::normal_distribution<double> unit(0.0, 1.0);
  const double w = static_cast<double>(cfg.image_width);
  const int patch_size = cfg.patch_halfwidth * cfg.patch_halfwidth;

  std::vector<Detection> out;
  for (const auto& agent : agents) {
    const Vec2 local = world_to_camera(robot, agent.position);
    const double range = local.norm();
    const double bearing = std::atan2(local.y, local.x);
    if (std::abs(bearing) > cfg.fov / 2.0) continue;
    if (range < cfg.min_range || range > cfg.max_range) continue;

    Detection det;
    det.id = agent.id;
    det.x_cen = bearing_to_column(bearing, cfg.image_width, cfg.fov) +
                cfg.centroid_noise_std * unit(rng);
    det.y_cen = cfg.image_height / 2.0;
    if (det.x_cen < 0.0 || det.x_cen >= w) continue;

    det.depth_patch.reserve(patch_size);
    for (int k = 0; k < patch_size; ++k) {
      const double v = range + cfg.depth_noise_std * unit(rng);
      det.depth_patch.push_back(v >= cfg.min_range && v <= cfg.max_range ? v : 0.0);
    }
    out.push_back(std::move(det));
  }
  return out;
}

double depth_estimate(const Detection& d) {
  double sum = 0.0;
  int valid = 0;
  for (double v : d.depth_patch) {
    if (std::isfinite(v) && v > 0.0) {
      sum += v;
      ++valid;
    }
  }
  if (valid == 0) {
    throw RangeUnavailable("no valid depth pixel for detection " + std::to_string(d.id));
  }
  return sum / valid;
}

double angular_displacement(double x_cen, int width, double fov) {
  const double w = static_cast<double>(width);
  return ((w / 2.0 - x_cen) / w) * fov;
}

Vec2 localize(double d, double psi) {
  if (!(d > 0.0)) throw std::invalid_argument("localize: range must be positive");
  return {d * std::cos(psi), d * std::sin(psi)};
}

Vec2 camera_to_world(const Pose2& robot, Vec2 p) {
  return robot.position + rotate(p, robot.heading);
}

Vec2 world_to_camera(const Pose2& robot, Vec2 p) {
  return rotate(p - robot.position, -robot.heading);
}

std::vector<Measurement> localize_detections(std::span<const Detection> detections,
                                             const Pose2& robot, const SensorConfig& cfg) {
  std::vector<Measurement> out;
  out.reserve(detections.size());
  for (const auto& det : detections) {
    double d = 0.0;
    try {
      d = depth_estimate(det);
    } catch (const RangeUnavailable&) {
      continue;
    }
    const double psi = angular_displacement(det.x_cen, cfg.image_width, cfg.fov);
    out.push_back({det.id, camera_to_world(robot, localize(d, psi))});
  }
  return out;
}

}  // namespace comet
