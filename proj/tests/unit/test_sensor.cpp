#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "comet/sensor.hpp"

using namespace comet;

namespace {

SensorConfig noiseless() {
  SensorConfig c;
  c.centroid_noise_std = 0.0;
  c.depth_noise_std = 0.0;
  return c;
}

AgentState at(int id, Vec2 p) {
  AgentState a;
  a.id = id;
  a.position = p;
  a.goal = p;
  return a;
}

}  // namespace

TEST(Observe, AgentDeadAhead) {
  std::mt19937_64 rng(1);
  const std::vector<AgentState> agents{at(7, {3.0, 0.0})};
  const auto det = observe(agents, Pose2{}, noiseless(), rng);
  ASSERT_EQ(det.size(), 1u);
  EXPECT_EQ(det[0].id, 7);
  EXPECT_DOUBLE_EQ(det[0].x_cen, 320.0);
  EXPECT_DOUBLE_EQ(depth_estimate(det[0]), 3.0);
}

TEST(Observe, OutsideFieldOfViewIsOmitted) {
  std::mt19937_64 rng(1);
  const SensorConfig cfg = noiseless();
  const double b = cfg.fov / 2 + 0.01;
  const std::vector<AgentState> agents{at(1, {3.0 * std::cos(b), 3.0 * std::sin(b)})};
  EXPECT_TRUE(observe(agents, Pose2{}, cfg, rng).empty());
}

TEST(Observe, OutsideRangeIsOmitted) {
  std::mt19937_64 rng(1);
  const SensorConfig cfg = noiseless();
  const std::vector<AgentState> agents{at(1, {0.1, 0.0}), at(2, {12.0, 0.0}),
                                       at(3, {-3.0, 0.0})};
  EXPECT_TRUE(observe(agents, Pose2{}, cfg, rng).empty());
}

TEST(Observe, BearingToColumnHandValue) {
  SensorConfig cfg = noiseless();
  cfg.fov = 1.5;
  std::mt19937_64 rng(1);
  const std::vector<AgentState> agents{at(1, {4.0 * std::cos(0.2), 4.0 * std::sin(0.2)})};
  const auto det = observe(agents, Pose2{}, cfg, rng);
  ASSERT_EQ(det.size(), 1u);
  EXPECT_NEAR(det[0].x_cen, 234.6666666667, 1e-6);
}

TEST(Observe, PatchSizeAndNoise) {
  SensorConfig cfg;
  cfg.centroid_noise_std = 0.0;
  cfg.depth_noise_std = 0.1;
  std::mt19937_64 rng(5);
  const std::vector<AgentState> agents{at(1, {4.0, 0.0})};
  const auto det = observe(agents, Pose2{}, cfg, rng);
  ASSERT_EQ(det.size(), 1u);
  EXPECT_EQ(det[0].depth_patch.size(),
            static_cast<std::size_t>(cfg.patch_halfwidth * cfg.patch_halfwidth));
}

TEST(DepthEstimate, Examples) {
  EXPECT_DOUBLE_EQ(depth_estimate({1, 0, 0, {2.0, 2.0, 2.0, 2.0}}), 2.0);
  EXPECT_DOUBLE_EQ(depth_estimate({1, 0, 0, {1.0, 3.0}}), 2.0);
}

TEST(DepthEstimate, InvalidPixelsIgnored) {
  EXPECT_DOUBLE_EQ(depth_estimate({1, 0, 0, {0.0, 3.0, 0.0, 5.0}}), 4.0);
  EXPECT_THROW(depth_estimate({1, 0, 0, {0.0, 0.0}}), RangeUnavailable);
  EXPECT_THROW(depth_estimate({1, 0, 0, {}}), RangeUnavailable);
}

TEST(DepthEstimate, MonteCarloNinePixelPatch) {
  // Mean of 9 samples of N(4, 0.01): std 0.0333, so 4 +- 0.02 holds for
  // about 45% of draws; the sample mean over draws must sit at 4 and the
  // spread must match sigma / 3.
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n(4.0, 0.1);
  std::vector<double> means;
  for (int s = 0; s < 1000; ++s) {
    Detection d{1, 0, 0, {}};
    for (int i = 0; i < 9; ++i) d.depth_patch.push_back(n(rng));
    means.push_back(depth_estimate(d));
  }
  const double mean = std::accumulate(means.begin(), means.end(), 0.0) / means.size();
  double var = 0.0;
  for (double m : means) var += (m - mean) * (m - mean);
  var /= means.size() - 1;
  EXPECT_NEAR(mean, 4.0, 0.005);
  EXPECT_NEAR(std::sqrt(var), 0.1 / 3.0, 0.004);
}

TEST(AngularDisplacement, Examples) {
  EXPECT_DOUBLE_EQ(angular_displacement(320, 640, 1.5), 0.0);
  EXPECT_DOUBLE_EQ(angular_displacement(0, 640, 1.5), 0.75);
  EXPECT_DOUBLE_EQ(angular_displacement(480, 640, 1.5), -0.375);
}

TEST(Localize, Examples) {
  const Vec2 a = localize(2.0, 0.0);
  EXPECT_DOUBLE_EQ(a.x, 2.0);
  EXPECT_DOUBLE_EQ(a.y, 0.0);
  const Vec2 b = localize(1.0, std::numbers::pi / 2);
  EXPECT_NEAR(b.x, 0.0, 1e-15);
  EXPECT_NEAR(b.y, 1.0, 1e-15);
  const Vec2 c = localize(5.0, 0.375);
  EXPECT_NEAR(c.x, 4.652, 1e-3);
  EXPECT_NEAR(c.y, 1.832, 1e-3);
  EXPECT_THROW(localize(0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(localize(-1.0, 0.1), std::invalid_argument);
}

TEST(Localize, NormEqualsRange) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(0.1, 20.0), psi(-1.5, 1.5);
  for (int i = 0; i < 1000; ++i) {
    const double r = d(rng);
    EXPECT_NEAR(localize(r, psi(rng)).norm(), r, 1e-12);
  }
}

TEST(PairwiseDistance, Examples) {
  EXPECT_DOUBLE_EQ(pairwise_distance({0, 0}, {0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(pairwise_distance({0, 0}, {3, 4}), 5.0);
  EXPECT_NEAR(pairwise_distance({1.2, -0.5}, {-0.8, 1.0}), 2.5, 1e-12);
  EXPECT_DOUBLE_EQ(pairwise_distance({1, 2}, {4, -2}), pairwise_distance({4, -2}, {1, 2}));
}

TEST(Frames, CameraWorldRoundTrip) {
  const Pose2 pose{{1.0, -2.0}, 0.7};
  const Vec2 p{3.5, 4.25};
  const Vec2 back = camera_to_world(pose, world_to_camera(pose, p));
  EXPECT_NEAR(back.x, p.x, 1e-12);
  EXPECT_NEAR(back.y, p.y, 1e-12);
}

TEST(LocalizeDetections, NoiselessPipelineRecoversWorldPositions) {
  std::mt19937_64 rng(2);
  const Pose2 pose{{2.0, 1.0}, -0.4};
  const std::vector<AgentState> agents{at(1, {6.0, 0.0}), at(2, {4.0, -1.0})};
  const SensorConfig cfg = noiseless();
  const auto ms = localize_detections(observe(agents, pose, cfg, rng), pose, cfg);
  ASSERT_EQ(ms.size(), 2u);
  for (const auto& m : ms) {
    const Vec2 truth = agents[m.id - 1].position;
    EXPECT_LT(distance(m.position, truth), 1e-9);
  }
}
