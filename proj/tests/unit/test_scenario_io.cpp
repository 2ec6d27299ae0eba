#include <gtest/gtest.h>

#include <random>

#include "comet/scenario_io.hpp"

using namespace comet;

namespace {

Scenario random_scenario(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  Scenario s;
  for (int i = 0; i < 6; ++i) {
    AgentState a;
    a.id = i + 1;
    a.position = {u(rng), u(rng)};
    a.velocity = {u(rng) / 10.0, u(rng) / 10.0};
    a.goal = {u(rng), u(rng)};
    if (i % 2 == 0) a.gender = i % 4 == 0 ? Gender::A : Gender::B;
    if (i % 3 != 0) {
      const double th = u(rng);
      a.face = FacePose{{a.position.x, a.position.y, 1.6}, {std::cos(th), std::sin(th), 0.0}};
    }
    s.agents.push_back(a);
  }
  s.groups_truth = {{{1, 2}, CohesionLevel::High}, {{3}, std::nullopt}};
  s.robot_start = {u(rng), u(rng)};
  s.robot_goal = {u(rng), u(rng)};
  s.robot_heading = 0.3;
  s.corridor_halfwidth = 2.75;
  s.dt = 0.05;
  s.params.proximity_weight = u(rng);
  s.params.combine_mode = CombineMode::GenderWeighted;
  s.params.grouping_rule = GroupingRule::DotSign;
  s.params.dwa.clearance_weight = 0.123456789012345;
  s.sensor.depth_noise_std = 0.0;
  return s;
}

}  // namespace

TEST(ScenarioIo, RoundTripIsExact) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Scenario s = random_scenario(seed);
    const Scenario back = parse_scenario(dump_scenario(s));
    EXPECT_EQ(back, s) << "seed " << seed;
  }
}

TEST(ScenarioIo, MinimalDocumentUsesDefaults) {
  const Scenario s = parse_scenario(R"({"agents": [], "robot": {"start": [0, 0], "goal": [5, 0]}})");
  EXPECT_EQ(s.params, ParamSet{});
  EXPECT_EQ(s.sensor, SensorConfig{});
  EXPECT_EQ(s.robot_goal, (Vec2{5, 0}));
}

TEST(ScenarioIo, InvalidScenarioThrows) {
  EXPECT_THROW(parse_scenario(R"({"agents": [], "robot": {"start": [1, 1], "goal": [1, 1]}})"),
               std::runtime_error);
  EXPECT_THROW(parse_scenario("{not json"), std::exception);
  EXPECT_THROW(parse_scenario(R"({"agents": [], "params": {"combine_mode": "product"}})"),
               std::exception);
}

TEST(ParamOverride, NestedAndTopLevel) {
  ParamSet p = apply_param_overrides(ParamSet{}, {"tau_low=4.5", "dwa.heading_weight=0.25",
                                                  "combine_mode=gender_weighted"});
  EXPECT_DOUBLE_EQ(p.tau_low, 4.5);
  EXPECT_DOUBLE_EQ(p.dwa.heading_weight, 0.25);
  EXPECT_EQ(p.combine_mode, CombineMode::GenderWeighted);
}

TEST(ParamOverride, UnknownKeyOrBadSyntaxThrows) {
  EXPECT_THROW(apply_param_overrides(ParamSet{}, {"no_such_key=1"}), std::exception);
  EXPECT_THROW(apply_param_overrides(ParamSet{}, {"tau_low"}), std::exception);
  EXPECT_THROW(apply_param_overrides(ParamSet{}, {"dwa.nothing=1"}), std::exception);
}
