#include "comet/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace comet {

NLOHMANN_JSON_SERIALIZE_ENUM(CombineMode, {
    {CombineMode::Additive, "additive"},
    {CombineMode::GenderWeighted, "gender_weighted"},
})

NLOHMANN_JSON_SERIALIZE_ENUM(GroupingRule, {
    {GroupingRule::NonDivergence, "non_divergence"},
    {GroupingRule::DotSign, "dot_sign"},
})

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(NoiseModel, process_var, meas_var, init_pos_var,
                                                init_vel_var, max_age)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(NavParams, sense_radius, approach_angle,
                                                angle_step, pedestrian_radius)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(DwaConfig, heading_weight, clearance_weight,
                                                speed_weight, horizon, rollout_dt, clearance_cap,
                                                speed_samples, turn_samples, obstacle_range,
                                                predict_obstacles, arrival_radius)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(RobotConfig, radius, v_max, omega_max, accel,
                                                omega_accel)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(FreezeRule, speed, duration)

void to_json(json& j, const Vec2& v) { j = json::array({v.x, v.y}); }

void from_json(const json& j, Vec2& v) {
  if (!j.is_array() || j.size() != 2) throw std::runtime_error("expected [x, y], got " + j.dump());
  v = {j[0].get<double>(), j[1].get<double>()};
}

void to_json(json& j, const Vec3& v) { j = json::array({v.x, v.y, v.z}); }

void from_json(const json& j, Vec3& v) {
  if (!j.is_array() || j.size() != 3) {
    throw std::runtime_error("expected [x, y, z], got " + j.dump());
  }
  v = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

void to_json(json& j, const SensorConfig& c) {
  j = json{{"image_width", c.image_width},
           {"image_height", c.image_height},
           {"fov", c.fov},
           {"min_range", c.min_range},
           {"max_range", c.max_range},
           {"centroid_noise_std", c.centroid_noise_std},
           {"depth_noise_std", c.depth_noise_std},
           {"patch_halfwidth", c.patch_halfwidth},
           {"occlusion", "none"}};
}

void from_json(const json& j, SensorConfig& c) {
  const SensorConfig d;
  c.image_width = j.value("image_width", d.image_width);
  c.image_height = j.value("image_height", d.image_height);
  c.fov = j.value("fov", d.fov);
  c.min_range = j.value("min_range", d.min_range);
  c.max_range = j.value("max_range", d.max_range);
  c.centroid_noise_std = j.value("centroid_noise_std", d.centroid_noise_std);
  c.depth_noise_std = j.value("depth_noise_std", d.depth_noise_std);
  c.patch_halfwidth = j.value("patch_halfwidth", d.patch_halfwidth);
  if (j.value("occlusion", std::string("none")) != "none") {
    throw std::runtime_error("only occlusion: none is supported");
  }
}

void to_json(json& j, const ParamSet& p) {
  j = json{{"proximity_weight", p.proximity_weight},
           {"speed_weight", p.speed_weight},
           {"size_weight", p.size_weight},
           {"interaction_weight", p.interaction_weight},
           {"gender_weight", p.gender_weight},
           {"group_distance", p.group_distance},
           {"static_boost", p.static_boost},
           {"tau_low", p.tau_low},
           {"tau_high", p.tau_high},
           {"horizon", p.horizon},
           {"combine_mode", p.combine_mode},
           {"d_clamp", p.d_clamp},
           {"grouping_rule", p.grouping_rule},
           {"static_speed", p.static_speed},
           {"face_toward_probability", p.face_toward_probability},
           {"max_pedestrian_speed", p.max_pedestrian_speed},
           {"nav", p.nav},
           {"tracking", p.tracking},
           {"dwa", p.dwa},
           {"robot", p.robot},
           {"freeze", p.freeze}};
}

void from_json(const json& j, ParamSet& p) {
  const ParamSet d;
  p.proximity_weight = j.value("proximity_weight", d.proximity_weight);
  p.speed_weight = j.value("speed_weight", d.speed_weight);
  p.size_weight = j.value("size_weight", d.size_weight);
  p.interaction_weight = j.value("interaction_weight", d.interaction_weight);
  p.gender_weight = j.value("gender_weight", d.gender_weight);
  p.group_distance = j.value("group_distance", d.group_distance);
  p.static_boost = j.value("static_boost", d.static_boost);
  p.tau_low = j.value("tau_low", d.tau_low);
  p.tau_high = j.value("tau_high", d.tau_high);
  p.horizon = j.value("horizon", d.horizon);
  p.combine_mode = j.value("combine_mode", d.combine_mode);
  p.d_clamp = j.value("d_clamp", d.d_clamp);
  p.grouping_rule = j.value("grouping_rule", d.grouping_rule);
  p.static_speed = j.value("static_speed", d.static_speed);
  p.face_toward_probability = j.value("face_toward_probability", d.face_toward_probability);
  p.max_pedestrian_speed = j.value("max_pedestrian_speed", d.max_pedestrian_speed);
  p.nav = j.value("nav", d.nav);
  p.tracking = j.value("tracking", d.tracking);
  p.dwa = j.value("dwa", d.dwa);
  p.robot = j.value("robot", d.robot);
  p.freeze = j.value("freeze", d.freeze);
}

namespace {

json agent_to_json(const AgentState& a) {
  json j{{"id", a.id}, {"position", a.position}, {"velocity", a.velocity}, {"goal", a.goal}};
  j["gender"] = a.gender ? json(*a.gender == Gender::A ? "A" : "B") : json(nullptr);
  if (a.face) {
    j["face"] = json{{"position", a.face->position}, {"orientation", a.face->orientation}};
  } else {
    j["face"] = nullptr;
  }
  return j;
}

AgentState agent_from_json(const json& j) {
  AgentState a;
  a.id = j.at("id").get<int>();
  a.position = j.at("position").get<Vec2>();
  a.velocity = j.value("velocity", Vec2{});
  a.goal = j.value("goal", a.position);
  if (auto it = j.find("gender"); it != j.end() && !it->is_null()) {
    const auto g = it->get<std::string>();
    if (g == "A") a.gender = Gender::A;
    else if (g == "B") a.gender = Gender::B;
    else throw std::runtime_error("gender must be \"A\" or \"B\", got " + g);
  }
  if (auto it = j.find("face"); it != j.end() && !it->is_null()) {
    a.face = FacePose{it->at("position").get<Vec3>(), it->at("orientation").get<Vec3>()};
  }
  return a;
}

}  // namespace

void to_json(json& j, const Scenario& s) {
  json agents = json::array();
  for (const auto& a : s.agents) agents.push_back(agent_to_json(a));
  json groups = json::array();
  for (const auto& g : s.groups_truth) {
    json gj{{"members", g.members}};
    gj["cohesion"] = g.cohesion ? json(to_string(*g.cohesion)) : json(nullptr);
    groups.push_back(gj);
  }
  json world{{"dt", s.dt}, {"max_steps", s.max_steps}, {"goal_tolerance", s.goal_tolerance}};
  world["corridor_halfwidth"] = s.corridor_halfwidth ? json(*s.corridor_halfwidth) : json(nullptr);
  j = json{{"agents", agents},
           {"groups", groups},
           {"robot", {{"start", s.robot_start}, {"goal", s.robot_goal}, {"heading", s.robot_heading}}},
           {"world", world},
           {"params", s.params},
           {"sensor", s.sensor}};
}

void from_json(const json& j, Scenario& s) {
  s = Scenario{};
  for (const auto& aj : j.at("agents")) s.agents.push_back(agent_from_json(aj));
  if (auto it = j.find("groups"); it != j.end()) {
    for (const auto& gj : *it) {
      GroupAnnotation g;
      g.members = gj.at("members").get<std::vector<int>>();
      if (auto c = gj.find("cohesion"); c != gj.end() && !c->is_null()) {
        g.cohesion = cohesion_level_from_string(c->get<std::string>());
        if (!g.cohesion) throw std::runtime_error("unknown cohesion level " + c->dump());
      }
      s.groups_truth.push_back(std::move(g));
    }
  }
  const auto& robot = j.at("robot");
  s.robot_start = robot.at("start").get<Vec2>();
  s.robot_goal = robot.at("goal").get<Vec2>();
  s.robot_heading = robot.value("heading", 0.0);
  if (auto it = j.find("world"); it != j.end()) {
    s.dt = it->value("dt", s.dt);
    s.max_steps = it->value("max_steps", s.max_steps);
    s.goal_tolerance = it->value("goal_tolerance", s.goal_tolerance);
    if (auto c = it->find("corridor_halfwidth"); c != it->end() && !c->is_null()) {
      s.corridor_halfwidth = c->get<double>();
    }
  }
  if (auto it = j.find("params"); it != j.end()) s.params = it->get<ParamSet>();
  if (auto it = j.find("sensor"); it != j.end()) s.sensor = it->get<SensorConfig>();
}

Scenario parse_scenario(std::string_view text) {
  Scenario s = json::parse(text).get<Scenario>();
  const auto errors = validate_scenario(s);
  if (!errors.empty()) {
    std::string message = "invalid scenario:";
    for (const auto& e : errors) message += "\n  " + e;
    throw std::runtime_error(message);
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string dump_scenario(const Scenario& s) { return json(s).dump(2); }

void save_scenario(const std::filesystem::path& path, const Scenario& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_scenario(s) << '\n';
}

void apply_param_override(json& params, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw std::runtime_error("override must look like KEY=VALUE: " + std::string(assignment));
  }
  const std::string key(assignment.substr(0, eq));
  const std::string raw(assignment.substr(eq + 1));

  std::string pointer;
  std::stringstream keys(key);
  for (std::string part; std::getline(keys, part, '.');) pointer += "/" + part;
  const json::json_pointer ptr(pointer);
  if (!params.contains(ptr)) throw std::runtime_error("unknown parameter " + key);

  json value = json::parse(raw, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) value = raw;
  params[ptr] = value;
}

ParamSet apply_param_overrides(const ParamSet& base, const std::vector<std::string>& assignments) {
  json j = base;
  for (const auto& a : assignments) apply_param_override(j, a);
  return j.get<ParamSet>();
}

}  // namespace comet
