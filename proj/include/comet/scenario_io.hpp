#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "comet/world.hpp"

namespace comet {

using json = nlohmann::json;

void to_json(json& j, const Vec2& v);
void from_json(const json& j, Vec2& v);
void to_json(json& j, const Vec3& v);
void from_json(const json& j, Vec3& v);
void to_json(json& j, const ParamSet& p);
void from_json(const json& j, ParamSet& p);
void to_json(json& j, const SensorConfig& c);
void from_json(const json& j, SensorConfig& c);
void to_json(json& j, const Scenario& s);
void from_json(const json& j, Scenario& s);

/// Parses a scenario document and validates it. Throws std::runtime_error
/// with every validation message joined when the scenario is invalid.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);
std::string dump_scenario(const Scenario& s);
void save_scenario(const std::filesystem::path& path, const Scenario& s);

/// Applies a `key=value` override to a params object. Dotted keys address
/// nested sections (`dwa.heading_weight=0.5`). The value is parsed as JSON
/// when possible and kept as a string otherwise.
void apply_param_override(json& params, std::string_view assignment);
ParamSet apply_param_overrides(const ParamSet& base, const std::vector<std::string>& assignments);

}  // namespace comet
