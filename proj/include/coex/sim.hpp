#ifndef COEX_SIM_HPP
#define COEX_SIM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coex/params.hpp"

namespace coex {

// One simulator run: n_w saturated DCF stations against the fixed LTE
// ON/OFF schedule. lte_enabled=false removes the interferer entirely
// (the "alpha = 0" reference mode) while keeping the rest identical.
struct SimConfig {
    ScenarioConfig scenario;
    double sim_time_s = 200.0;
    std::uint64_t seed = 1;
    double warmup_s = 1.0;     // statistics start after this much simulated time
    bool lte_enabled = true;

    void validate() const;
};

struct StationStats {
    long long tx_attempts = 0;
    long long successes = 0;
    long long lte_edge_collisions = 0;
    long long wifi_wifi_collisions = 0;
    double p_coll_total = 0.0;
    double p_coll_lte = 0.0;
    double tput_wifi = 0.0;    // Mbps
};

struct SimStats {
    long long tx_attempts = 0;
    long long successes = 0;
    long long lte_edge_collisions = 0;
    long long wifi_wifi_collisions = 0;
    double p_coll_total = 0.0; // (tx_attempts - successes)/tx_attempts
    double p_coll_lte = 0.0;   // lte_edge_collisions/tx_attempts
    double tput_wifi = 0.0;    // Mbps, payload bits over the measured window
    std::vector<StationStats> per_station;
    double ci95_tput = 0.0;    // half-width across runs; 0 for a single run
};

// Optional instrumentation, filled when passed to run(). Event lines are
// only collected with record_events set (they get large fast); the
// histograms and time accounting are always maintained.
struct SimTrace {
    bool record_events = false;
    std::vector<std::string> events;          // "t_ns event station detail"
    std::vector<std::vector<long long>> backoff_hist; // [stage][drawn value]
    std::vector<std::pair<std::int64_t, std::int64_t>> success_spans; // ns
    std::int64_t idle_ns = 0;
    std::int64_t busy_ns = 0;                 // frames and LTE ON time
};

// Deterministic: same config (seed included) gives identical stats.
SimStats run(const SimConfig& cfg, SimTrace* trace = nullptr);

// Mean metrics across >= 2 runs of the same scenario plus a 95%
// t-interval half-width on the Wi-Fi throughput.
SimStats aggregate(const std::vector<SimStats>& runs);

} // namespace coex

#endif
