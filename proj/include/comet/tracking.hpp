#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "comet/sensor.hpp"
#include "comet/world.hpp"

namespace comet {

/// Constant-velocity track: state [x, y, vx, vy] and its covariance.
struct Track {
  int id = 0;
  Eigen::Vector4d state = Eigen::Vector4d::Zero();
  Eigen::Matrix4d covariance = Eigen::Matrix4d::Identity();
  int last_seen = 0;

  Vec2 position() const { return {state(0), state(1)}; }
  Vec2 velocity() const { return {state(2), state(3)}; }
};

/// Discrete white-noise-acceleration process covariance scaled by q.
Eigen::Matrix4d process_noise(double dt, double q);

Track kf_predict(Track t, double dt, const NoiseModel& noise);

/// Position-only measurement update (Joseph form). Throws std::runtime_error
/// when the innovation covariance is numerically singular.
Track kf_update(Track t, Vec2 z, const NoiseModel& noise);

/// New track at the measured position with zero velocity.
Track init_track(int id, Vec2 z, int step, const NoiseModel& noise);

/// One tracker cycle at timestep `step`: every live track is predicted by dt,
/// tracks with a measurement of the same id are updated, unseen ids start new
/// tracks, and tracks unseen for more than max_age steps are dropped.
/// Association is by id only. The result is sorted by id.
std::vector<Track> step_tracks(std::span<const Track> tracks,
                               std::span<const Measurement> measurements, int step, double dt,
                               const NoiseModel& noise);

}  // namespace comet
