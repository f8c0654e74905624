#include "coex/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "coex/errors.hpp"
#include "scenario_json.hpp"

namespace coex {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    if (!obj.is_object())
        throw ConfigError(where + ": expected a JSON object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key)
                known = true;
        if (!known)
            throw ConfigError(where + ": unknown key \"" + item.key() + "\"");
    }
}

namespace {

template <typename T>
T get_field(const json& obj, const char* key, const std::string& where, T fallback) {
    if (!obj.contains(key))
        return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + "." + key + ": wrong type");
    }
}

template <typename T>
T require_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw ConfigError(where + ": missing required key \"" + key + "\"");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + "." + key + ": wrong type");
    }
}

} // namespace

json scenario_to_json(const ScenarioConfig& cfg) {
    json j;
    j["wifi"] = {{"w0", cfg.wifi.w0},
                 {"m", cfg.wifi.m},
                 {"sigma", cfg.wifi.sigma},
                 {"difs", cfg.wifi.difs},
                 {"sifs", cfg.wifi.sifs},
                 {"phy_header", cfg.wifi.phy_header},
                 {"mac_header_bytes", cfg.wifi.mac_header_bytes},
                 {"ack_bytes", cfg.wifi.ack_bytes},
                 {"ack_extra", cfg.wifi.ack_extra},
                 {"delta", cfg.wifi.delta},
                 {"basic_rates", cfg.wifi.basic_rates}};
    j["lte"] = {{"alpha", cfg.lte.alpha},
                {"t_cycle", cfg.lte.t_cycle},
                {"r_l", cfg.lte.r_l}};
    j["n_w"] = cfg.n_w;
    j["r_w"] = cfg.r_w;
    j["packet_bytes"] = cfg.packet_bytes;
    j["enforce_lteu_limits"] = cfg.enforce_lteu_limits;
    return j;
}

ScenarioConfig scenario_from_json(const json& j, const std::string& where) {
    reject_unknown_keys(j, where,
                        {"wifi", "lte", "n_w", "r_w", "packet_bytes", "enforce_lteu_limits"});
    ScenarioConfig cfg;

    if (j.contains("wifi")) {
        const json& w = j.at("wifi");
        std::string ww = where + ".wifi";
        reject_unknown_keys(w, ww,
                            {"w0", "m", "sigma", "difs", "sifs", "phy_header",
                             "mac_header_bytes", "ack_bytes", "ack_extra", "delta",
                             "basic_rates"});
        WifiMacParams d;
        cfg.wifi.w0 = get_field(w, "w0", ww, d.w0);
        cfg.wifi.m = get_field(w, "m", ww, d.m);
        cfg.wifi.sigma = get_field(w, "sigma", ww, d.sigma);
        cfg.wifi.difs = get_field(w, "difs", ww, d.difs);
        cfg.wifi.sifs = get_field(w, "sifs", ww, d.sifs);
        cfg.wifi.phy_header = get_field(w, "phy_header", ww, d.phy_header);
        cfg.wifi.mac_header_bytes = get_field(w, "mac_header_bytes", ww, d.mac_header_bytes);
        cfg.wifi.ack_bytes = get_field(w, "ack_bytes", ww, d.ack_bytes);
        cfg.wifi.ack_extra = get_field(w, "ack_extra", ww, d.ack_extra);
        cfg.wifi.delta = get_field(w, "delta", ww, d.delta);
        cfg.wifi.basic_rates = get_field(w, "basic_rates", ww, d.basic_rates);
    }

    const json& l = [&]() -> const json& {
        if (!j.contains("lte"))
            throw ConfigError(where + ": missing required key \"lte\"");
        return j.at("lte");
    }();
    std::string wl = where + ".lte";
    reject_unknown_keys(l, wl, {"alpha", "t_cycle", "r_l"});
    cfg.lte.alpha = require_field<double>(l, "alpha", wl);
    cfg.lte.t_cycle = require_field<double>(l, "t_cycle", wl);
    cfg.lte.r_l = get_field(l, "r_l", wl, LteDcParams{}.r_l);

    ScenarioConfig d;
    cfg.n_w = get_field(j, "n_w", where, d.n_w);
    cfg.r_w = get_field(j, "r_w", where, d.r_w);
    cfg.packet_bytes = get_field(j, "packet_bytes", where, d.packet_bytes);
    cfg.enforce_lteu_limits = get_field(j, "enforce_lteu_limits", where, d.enforce_lteu_limits);

    cfg.validate();
    return cfg;
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(what + ": " + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string to_json_string(const ScenarioConfig& cfg) {
    return scenario_to_json(cfg).dump();
}

ScenarioConfig scenario_from_json_string(const std::string& text) {
    return scenario_from_json(parse_json_text(text, "scenario"), "scenario");
}

ScenarioConfig scenario_from_json_file(const std::string& path) {
    return scenario_from_json(load_json_file(path), path);
}

std::uint64_t config_hash(const ScenarioConfig& cfg) {
    return fnv1a64(to_json_string(cfg));
}

} // namespace coex
