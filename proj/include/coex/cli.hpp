#ifndef COEX_CLI_HPP
#define COEX_CLI_HPP

#include <cstdint>
#include <string>

namespace coex {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;     // bad flags, config, or inputs
inline constexpr int kExitTolerance = 2; // compare: deviation above tolerance
inline constexpr int kExitInternal = 3;  // solver/model/unexpected failure

struct SimulateOptions {
    int runs = 3;
    double sim_time_s = 20.0;
    std::uint64_t seed = 1;
    bool trace = false; // event trace of the first grid point's first run
};

struct CompareOptions {
    double prob_tol = 0.03;  // absolute, on collision probabilities
    double tput_rtol = 0.07; // relative, on Wi-Fi throughput
};

// Each command reads a sweep spec (see README for the JSON schema),
// writes a CSV, prints diagnostics to stderr, and returns an exit code
// instead of throwing.
int cmd_analyze(const std::string& config_path, const std::string& out_path);

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 const SimulateOptions& opts);

// mode is "access" or "throughput".
int cmd_fairness(const std::string& config_path, const std::string& mode,
                 const std::string& out_path);

// Joins an analyze CSV against a simulate CSV on (sweep_value, alpha) and
// checks the model against the simulation. out_path may be empty.
int cmd_compare(const std::string& analytical_csv, const std::string& sim_csv,
                const std::string& out_path, const CompareOptions& opts);

} // namespace coex

#endif
