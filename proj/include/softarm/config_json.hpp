#pragma once

#include <json.hpp>

#include <softarm/reach_env.hpp>
#include <softarm/rod.hpp>

namespace softarm {

// ADL hooks so nlohmann::json converts these directly. from_json requires
// every field to be present (throws nlohmann::json::out_of_range otherwise).
void to_json(nlohmann::json& j, const RodParams& p);
void from_json(const nlohmann::json& j, RodParams& p);

void to_json(nlohmann::json& j, const ScenarioSpec& s);
void from_json(const nlohmann::json& j, ScenarioSpec& s);

void to_json(nlohmann::json& j, const EnvConfig& c);
void from_json(const nlohmann::json& j, EnvConfig& c);

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& name);

}  // namespace softarm
