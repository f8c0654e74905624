#ifndef COEX_SCENARIO_IO_HPP
#define COEX_SCENARIO_IO_HPP

#include <cstdint>
#include <string>

#include "coex/params.hpp"

namespace coex {

// Canonical JSON (sorted keys, shortest round-trip numbers); parsing the
// result reproduces the config field-exactly.
std::string to_json_string(const ScenarioConfig& cfg);

// Strict parse: lte.alpha and lte.t_cycle are required, everything else
// falls back to the defaults; unknown keys anywhere are rejected.
ScenarioConfig scenario_from_json_string(const std::string& text);
ScenarioConfig scenario_from_json_file(const std::string& path);

// FNV-1a over the canonical serialization; stamped into CSV headers so a
// result file names the exact configuration that produced it.
std::uint64_t config_hash(const ScenarioConfig& cfg);

} // namespace coex

#endif
