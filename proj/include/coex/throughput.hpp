#ifndef COEX_THROUGHPUT_HPP
#define COEX_THROUGHPUT_HPP

#include "coex/dcf.hpp"
#include "coex/off_period.hpp"
#include "coex/params.hpp"

namespace coex {

// P(at least one of n_w stations transmits in a slot).
double prob_any_tx(double tau, int n_w);

// P(exactly one transmits | at least one does); 1 in the tau->0 limit.
double prob_success_given_tx(double tau, int n_w);

struct ThroughputReport {
    double tput_wifi_coex = 0.0; // Mbps, whole Wi-Fi network under the interferer
    double tput_lte = 0.0;       // Mbps
    double tput_wifi_only = 0.0; // Mbps, same n_w stations with the channel to themselves
    double p_trw = 0.0;
    double p_sw = 0.0;
    double e_n = 0.0;            // expected completed packets per OFF period
    double p_c_total = 0.0;      // per-attempt collision probability (both sources)
};

// One fully evaluated scenario, intermediate layers included.
struct CoexEvaluation {
    PacketTiming timing;
    LteTiming lte;
    OffPeriodGeometry geom;
    OffPeriodDistributions dist;
    FixedPointSolution fp;       // tau and total collision probability
    ThroughputReport report;
};

// Full analytical pipeline: airtimes, OFF-period layout, edge-collision
// probability, coupled (tau, P_c) solve, success sequence, throughputs.
// A caller evaluating many scenarios with the same w0 can pass a shared
// BackoffSumTable to reuse the convolution work.
CoexEvaluation evaluate_coex(const ScenarioConfig& cfg, BackoffSumTable* table = nullptr);

// Shorthand for evaluate_coex(cfg).report.tput_wifi_coex.
double wifi_coex_throughput(const ScenarioConfig& cfg);

// Duty-cycled LTE throughput: 13 of 14 OFDM symbols per subframe carry data.
double lte_throughput(double alpha, double r_l);

// Saturation throughput of n stations alone on the channel (no interferer),
// from the slot-time decomposition of the DCF cycle.
double wifi_only_throughput(int n, const ScenarioConfig& cfg);

enum class FairnessMode { access, throughput };

struct FairnessOptions {
    double coarse_step = 1e-3;  // first scan over the duty cycle
    double fine_step = 1e-5;    // refinement inside the winning neighborhood
    int reference_stations = 0; // 0 means 2*n_w (the replaced-network baseline)
};

struct FairnessResult {
    double alpha_star = 0.0;
    double objective_residual = 0.0;
    double metric_at_optimum = 0.0; // tau_w or Tput_w at alpha_star
    double target = 0.0;            // tau_wo or Tput_wo/2
    bool boundary = false;          // argmin sits on an admissible-interval end
};

// Duty cycle minimizing |tau_w(alpha) - tau_wo(N_ref)|: the coexisting
// stations get the same per-slot access probability they would have if
// the interferer were N_ref - n_w more Wi-Fi stations.
FairnessResult access_fair_alpha(const ScenarioConfig& cfg, int n_w,
                                 const FairnessOptions& opts = {});

// Duty cycle minimizing |Tput_w(alpha) - Tput_wo(N_ref)/2|: the Wi-Fi
// network keeps half the throughput of the doubled Wi-Fi-only network.
FairnessResult throughput_fair_alpha(const ScenarioConfig& cfg, int n_w,
                                     const FairnessOptions& opts = {});

} // namespace coex

#endif
