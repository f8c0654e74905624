#ifndef COEX_SCENARIO_JSON_HPP
#define COEX_SCENARIO_JSON_HPP

// Internal glue between the JSON layer and the value types; not installed
// with the public headers so json.hpp stays out of the library interface.

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "coex/params.hpp"

namespace coex {

void reject_unknown_keys(const nlohmann::json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed);

nlohmann::json scenario_to_json(const ScenarioConfig& cfg);
ScenarioConfig scenario_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json parse_json_text(const std::string& text, const std::string& what);
nlohmann::json load_json_file(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);

} // namespace coex

#endif
