#ifndef COEX_SWEEP_HPP
#define COEX_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coex/params.hpp"

namespace coex {

enum class SweepVar { packet_bytes, alpha, n_w };

// A sweep file: one base scenario, one swept variable, the grid values,
// and the evaluation modes the sweep is meant for. alpha_grid (optional,
// meaningless when alpha itself is swept) crosses every sweep value with
// several duty cycles, one output row per combination.
struct SweepSpec {
    ScenarioConfig base;
    SweepVar var = SweepVar::packet_bytes;
    std::vector<double> values;
    std::vector<std::string> modes;
    std::vector<double> alpha_grid;

    bool has_mode(const std::string& mode) const;
    void validate() const;
};

SweepSpec sweep_from_json_file(const std::string& path);
SweepSpec sweep_from_json_string(const std::string& text);

// Canonical serialization and its hash (stamped into result files).
std::string to_json_string(const SweepSpec& spec);
std::uint64_t sweep_hash(const SweepSpec& spec);

// One evaluation point of the expanded grid.
struct GridPoint {
    double sweep_value = 0.0;
    ScenarioConfig cfg;
};

// Cross product of values and alpha_grid (or just values), in file order:
// sweep values outermost, duty cycles within.
std::vector<GridPoint> expand_grid(const SweepSpec& spec);

const char* sweep_var_name(SweepVar var);

} // namespace coex

#endif
