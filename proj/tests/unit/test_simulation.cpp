#include <gtest/gtest.h>

#include <numbers>

#include "comet/metrics.hpp"
#include "comet/simulation.hpp"

using namespace comet;

namespace {

AgentState walker(int id, Vec2 p, Vec2 v, Vec2 goal) {
  AgentState a;
  a.id = id;
  a.position = p;
  a.velocity = v;
  a.goal = goal;
  return a;
}

Scenario empty_world() {
  Scenario s;
  s.robot_start = {0, 0};
  s.robot_goal = {10, 0};
  return s;
}

void expect_identical(const TrialResult& a, const TrialResult& b) {
  ASSERT_EQ(a.steps.size(), b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    EXPECT_EQ(a.steps[i].position, b.steps[i].position);
    EXPECT_EQ(a.steps[i].velocity, b.steps[i].velocity);
    EXPECT_EQ(a.steps[i].deviation, b.steps[i].deviation);
    EXPECT_EQ(a.steps[i].frozen, b.steps[i].frozen);
  }
  EXPECT_EQ(a.reached_goal, b.reached_goal);
  EXPECT_EQ(a.froze, b.froze);
  EXPECT_EQ(a.collisions, b.collisions);
  EXPECT_EQ(a.avg_deviation_deg, b.avg_deviation_deg);
  EXPECT_EQ(a.normalized_path_length, b.normalized_path_length);
}

}  // namespace

TEST(StepPedestrians, ConstantVelocityTowardGoal) {
  std::vector<AgentState> a{walker(1, {0, 0}, {1, 0}, {10, 0})};
  step_pedestrians(a, 0.1);
  EXPECT_NEAR(a[0].position.x, 0.1, 1e-12);
  EXPECT_NEAR(a[0].position.y, 0.0, 1e-12);
}

TEST(StepPedestrians, StaysAtGoal) {
  std::vector<AgentState> a{walker(1, {10, 0}, {0, 0}, {10, 0})};
  step_pedestrians(a, 0.1);
  EXPECT_EQ(a[0].position, (Vec2{10, 0}));
  std::vector<AgentState> b{walker(2, {9.95, 0}, {1, 0}, {10, 0})};
  step_pedestrians(b, 0.1);
  EXPECT_EQ(b[0].position, (Vec2{10, 0}));
  EXPECT_EQ(b[0].velocity, (Vec2{0, 0}));
}

TEST(StepPedestrians, FaceFollowsBody) {
  AgentState a = walker(1, {0, 0}, {1, 0}, {10, 0});
  a.face = FacePose{{0, 0, 1.6}, {1, 0, 0}};
  std::vector<AgentState> v{a};
  step_pedestrians(v, 0.5);
  EXPECT_NEAR(v[0].face->position.x, 0.5, 1e-12);
  EXPECT_EQ(v[0].face->position.z, 1.6);
}

TEST(StepRobot, UnicycleStraight) {
  RobotState r;
  step_robot(r, {1.0, 0.0}, 0.5);
  EXPECT_NEAR(r.position.x, 0.5, 1e-12);
  EXPECT_NEAR(r.position.y, 0.0, 1e-12);
}

TEST(StepRobot, ClampsToLimits) {
  RobotState r;
  step_robot(r, {5.0, 9.0}, 0.1);
  EXPECT_NEAR(r.velocity.norm(), r.v_max, 1e-12);
  EXPECT_EQ(r.omega, r.omega_max);
}

TEST(StepWorld, CountsNewContactsOnce) {
  Scenario s = empty_world();
  s.agents = {walker(1, {0.55, 0}, {0, 0}, {0.55, 0})};
  WorldState w = initial_state(s);
  w = step_world(s, w, {1.0, 0.0}, 0.1);
  EXPECT_EQ(w.collisions, 1);
  w = step_world(s, w, {0.0, 0.0}, 0.1);
  EXPECT_EQ(w.collisions, 1);
}

TEST(RunTrial, EmptyWorldEveryPlanner) {
  // a corridor-length run, so the 0.3 m goal tolerance stays inside 2%
  Scenario s = empty_world();
  s.robot_goal = {20, 0};
  for (auto kind : {PlannerKind::Dwa, PlannerKind::Frozone, PlannerKind::Comet}) {
    const auto r = run_trial(s, kind, 1);
    EXPECT_TRUE(r.reached_goal) << to_string(kind);
    EXPECT_FALSE(r.froze);
    ASSERT_TRUE(r.normalized_path_length);
    EXPECT_NEAR(*r.normalized_path_length, 1.0, 0.02);
    EXPECT_LE(*r.normalized_path_length, 1.05);
    EXPECT_LT(r.avg_deviation_deg, 0.5);
  }
}

TEST(RunTrial, BoxedInRobotFreezes) {
  Scenario s = empty_world();
  int id = 1;
  for (int k = 0; k < 16; ++k) {
    const double a = k * std::numbers::pi / 8;
    const Vec2 p{0.7 * std::cos(a), 0.7 * std::sin(a)};
    s.agents.push_back(walker(id++, p, {0, 0}, p));
  }
  s.max_steps = 50;
  for (auto kind : {PlannerKind::Dwa, PlannerKind::Frozone, PlannerKind::Comet}) {
    const auto r = run_trial(s, kind, 3);
    EXPECT_TRUE(r.froze) << to_string(kind);
    EXPECT_FALSE(r.reached_goal);
  }
}

TEST(RunTrial, Deterministic) {
  Scenario s = empty_world();
  s.agents = {walker(1, {6, 0.3}, {-0.8, 0}, {-5, 0.3}), walker(2, {6.5, -0.4}, {-0.8, 0}, {-5, -0.4}),
              walker(3, {4, 2}, {0, -0.5}, {4, -5})};
  for (auto kind : {PlannerKind::Dwa, PlannerKind::Frozone, PlannerKind::Comet}) {
    expect_identical(run_trial(s, kind, 9), run_trial(s, kind, 9));
  }
}

TEST(NominalVelocity, StopsShortOfGoal) {
  RobotState r;
  r.goal = {1.5, 0};
  const Vec2 v = nominal_velocity(r, 3.0);
  EXPECT_NEAR(v.x, 0.5, 1e-12);
  r.goal = {10, 0};
  EXPECT_NEAR(nominal_velocity(r, 3.0).x, r.v_max, 1e-12);
}
