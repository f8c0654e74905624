#include "coex/sweep.hpp"

#include <cmath>
#include <sstream>

#include "coex/errors.hpp"
#include "scenario_json.hpp"

namespace coex {

using nlohmann::json;

namespace {

const char* const kModes[] = {"analytical", "simulate", "fairness_access",
                              "fairness_throughput"};

SweepVar var_from_name(const std::string& name) {
    if (name == "packet_bytes")
        return SweepVar::packet_bytes;
    if (name == "alpha")
        return SweepVar::alpha;
    if (name == "n_w")
        return SweepVar::n_w;
    throw ConfigError("sweep_var must be packet_bytes, alpha, or n_w (got \"" +
                      name + "\")");
}

bool is_integral(double v) {
    return v == std::floor(v);
}

SweepSpec sweep_from_json(const json& j, const std::string& where) {
    reject_unknown_keys(j, where, {"base", "sweep_var", "values", "modes", "alpha_grid"});
    SweepSpec spec;
    if (!j.contains("base"))
        throw ConfigError(where + ": missing required key \"base\"");
    spec.base = scenario_from_json(j.at("base"), where + ".base");
    if (!j.contains("sweep_var"))
        throw ConfigError(where + ": missing required key \"sweep_var\"");
    spec.var = var_from_name(j.at("sweep_var").get<std::string>());
    if (!j.contains("values"))
        throw ConfigError(where + ": missing required key \"values\"");
    try {
        spec.values = j.at("values").get<std::vector<double>>();
        if (j.contains("modes"))
            spec.modes = j.at("modes").get<std::vector<std::string>>();
        if (j.contains("alpha_grid"))
            spec.alpha_grid = j.at("alpha_grid").get<std::vector<double>>();
    } catch (const json::exception&) {
        throw ConfigError(where + ": values/modes/alpha_grid have wrong types");
    }
    spec.validate();
    return spec;
}

} // namespace

const char* sweep_var_name(SweepVar var) {
    switch (var) {
    case SweepVar::packet_bytes: return "packet_bytes";
    case SweepVar::alpha: return "alpha";
    case SweepVar::n_w: return "n_w";
    }
    return "?";
}

bool SweepSpec::has_mode(const std::string& mode) const {
    for (const std::string& s : modes)
        if (s == mode)
            return true;
    return false;
}

void SweepSpec::validate() const {
    if (values.empty())
        throw ConfigError("sweep: values must be nonempty");
    for (double v : values) {
        switch (var) {
        case SweepVar::packet_bytes:
            if (!is_integral(v) || v < 1)
                throw ConfigError("sweep: packet_bytes values must be integers >= 1");
            break;
        case SweepVar::alpha:
            if (!(v > 0.0 && v < 1.0))
                throw ConfigError("sweep: alpha values must lie strictly between 0 and 1");
            break;
        case SweepVar::n_w:
            if (!is_integral(v) || v < 1)
                throw ConfigError("sweep: n_w values must be integers >= 1");
            break;
        }
    }
    if (modes.empty())
        throw ConfigError("sweep: modes must be nonempty");
    for (const std::string& mode : modes) {
        bool known = false;
        for (const char* k : kModes)
            if (mode == k)
                known = true;
        if (!known)
            throw ConfigError("sweep: unknown mode \"" + mode + "\"");
    }
    if (!alpha_grid.empty()) {
        if (var == SweepVar::alpha)
            throw ConfigError("sweep: alpha_grid cannot be combined with sweep_var=alpha");
        for (double a : alpha_grid)
            if (!(a > 0.0 && a < 1.0))
                throw ConfigError("sweep: alpha_grid entries must lie strictly between 0 and 1");
    }
}

SweepSpec sweep_from_json_file(const std::string& path) {
    return sweep_from_json(load_json_file(path), path);
}

SweepSpec sweep_from_json_string(const std::string& text) {
    return sweep_from_json(parse_json_text(text, "sweep"), "sweep");
}

std::string to_json_string(const SweepSpec& spec) {
    json j;
    j["base"] = scenario_to_json(spec.base);
    j["sweep_var"] = sweep_var_name(spec.var);
    j["values"] = spec.values;
    j["modes"] = spec.modes;
    if (!spec.alpha_grid.empty())
        j["alpha_grid"] = spec.alpha_grid;
    return j.dump();
}

std::uint64_t sweep_hash(const SweepSpec& spec) {
    return fnv1a64(to_json_string(spec));
}

std::vector<GridPoint> expand_grid(const SweepSpec& spec) {
    std::vector<GridPoint> grid;
    std::vector<double> alphas = spec.alpha_grid;
    if (alphas.empty())
        alphas.push_back(spec.base.lte.alpha);
    grid.reserve(spec.values.size() * alphas.size());
    for (double v : spec.values) {
        for (double a : alphas) {
            GridPoint pt;
            pt.sweep_value = v;
            pt.cfg = spec.base;
            pt.cfg.lte.alpha = a;
            switch (spec.var) {
            case SweepVar::packet_bytes:
                pt.cfg.packet_bytes = static_cast<int>(std::llround(v));
                break;
            case SweepVar::alpha:
                pt.cfg.lte.alpha = v;
                break;
            case SweepVar::n_w:
                pt.cfg.n_w = static_cast<int>(std::llround(v));
                break;
            }
            grid.push_back(std::move(pt));
        }
    }
    return grid;
}

} // namespace coex
