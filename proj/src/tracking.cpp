#include "comet/tracking.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace comet {

namespace {

Eigen::Matrix<double, 2, 4> measurement_matrix() {
  Eigen::Matrix<double, 2, 4> h = Eigen::Matrix<double, 2, 4>::Zero();
  h(0, 0) = 1.0;
  h(1, 1) = 1.0;
  return h;
}

}  // namespace

Eigen::Matrix4d process_noise(double dt, double q) {
  const double dt2 = dt * dt;
  const double a = dt2 * dt2 / 4.0;
  const double b = dt2 * dt / 2.0;
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = a; m(0, 2) = b; m(2, 0) = b; m(2, 2) = dt2;
  m(1, 1) = a; m(1, 3) = b; m(3, 1) = b; m(3, 3) = dt2;
  return q * m;
}

Track kf_predict(Track t, double dt, const NoiseModel& noise) {
  if (!(dt > 0.0)) throw std::invalid_argument("kf_predict: dt must be positive");
  Eigen::Matrix4d f = Eigen::Matrix4d::Identity();
  f(0, 2) = dt;
  f(1, 3) = dt;
  t.state = f * t.state;
  t.covariance = f * t.covariance * f.transpose() + process_noise(dt, noise.process_var);
  t.covariance = 0.5 * (t.covariance + t.covariance.transpose());
  return t;
}

Track kf_update(Track t, Vec2 z, const NoiseModel& noise) {
  if (!z.finite()) throw std::invalid_argument("kf_update: measurement must be finite");
  const auto h = measurement_matrix();
  const Eigen::Matrix2d r = noise.meas_var * Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d s = h * t.covariance * h.transpose() + r;

  Eigen::LDLT<Eigen::Matrix2d> ldlt(s);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
      std::abs(s.determinant()) < 1e-300) {
    throw std::runtime_error("kf_update: singular innovation covariance");
  }
  const Eigen::Matrix<double, 4, 2> gain =
      ldlt.solve(h * t.covariance.transpose()).transpose();

  const Eigen::Vector2d innovation(z.x - t.state(0), z.y - t.state(1));
  t.state += gain * innovation;

  const Eigen::Matrix4d i_kh = Eigen::Matrix4d::Identity() - gain * h;
  t.covariance = i_kh * t.covariance * i_kh.transpose() + gain * r * gain.transpose();
  t.covariance = 0.5 * (t.covariance + t.covariance.transpose());
  return t;
}

Track init_track(int id, Vec2 z, int step, const NoiseModel& noise) {
  Track t;
  t.id = id;
  t.state << z.x, z.y, 0.0, 0.0;
  t.covariance = Eigen::Vector4d(noise.init_pos_var, noise.init_pos_var, noise.init_vel_var,
                                 noise.init_vel_var)
                     .asDiagonal();
  t.last_seen = step;
  return t;
}

std::vector<Track> step_tracks(std::span<const Track> tracks,
                               std::span<const Measurement> measurements, int step, double dt,
                               const NoiseModel& noise) {
  std::map<int, Track> by_id;
  for (const auto& t : tracks) by_id.emplace(t.id, kf_predict(t, dt, noise));

  for (const auto& m : measurements) {
    auto it = by_id.find(m.id);
    if (it == by_id.end()) {
      by_id.emplace(m.id, init_track(m.id, m.position, step, noise));
    } else {
      it->second = kf_update(it->second, m.position, noise);
      it->second.last_seen = step;
    }
  }

  std::vector<Track> out;
  out.reserve(by_id.size());
  for (auto& [id, t] : by_id) {
    if (step - t.last_seen <= noise.max_age) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace comet
