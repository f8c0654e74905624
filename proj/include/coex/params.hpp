#ifndef COEX_PARAMS_HPP
#define COEX_PARAMS_HPP

#include <vector>

namespace coex {

// 802.11 MAC constants. Defaults are 802.11a OFDM numbers: slot 9 us,
// DIFS 34 us, SIFS 16 us, 20 us PHY preamble+header, CWmin 15 (W0=16)
// and CWmax 1023 (m=6), ACK sent at a basic rate plus its own 20 us
// preamble. All durations in microseconds.
struct WifiMacParams {
    int w0 = 16;                // minimum contention window (slots), power of two
    int m = 6;                  // last stage whose window still doubles
    double sigma = 9.0;         // slot time, us
    double difs = 34.0;         // us
    double sifs = 16.0;         // us
    double phy_header = 20.0;   // data-frame preamble + PHY header, us
    int mac_header_bytes = 34;
    int ack_bytes = 14;
    double ack_extra = 20.0;    // ACK preamble portion, us
    double delta = 0.1;         // one-way propagation delay, us
    std::vector<double> basic_rates = {6.0, 12.0, 24.0}; // Mbps, ascending

    void validate() const;
    bool operator==(const WifiMacParams&) const = default;
};

// Duty-cycled LTE downlink: ON for alpha*t_cycle, silent for the rest.
struct LteDcParams {
    double alpha = 0.5;         // duty cycle, in (0,1)
    double t_cycle = 10000.0;   // cycle period, us
    double r_l = 100.0;         // LTE downlink data rate, Mbps

    double t_on() const { return alpha * t_cycle; }
    double t_off() const { return t_cycle - t_on(); }

    void validate() const;
    bool operator==(const LteDcParams&) const = default;
};

// One complete coexistence scenario: n_w saturated Wi-Fi stations plus
// the duty-cycled LTE interferer.
struct ScenarioConfig {
    WifiMacParams wifi;
    LteDcParams lte;
    int n_w = 1;                // Wi-Fi stations
    double r_w = 6.0;           // Wi-Fi data rate, Mbps
    int packet_bytes = 1500;    // payload size
    bool enforce_lteu_limits = false; // check LTE-U Forum ON/OFF bounds

    void validate() const;
    bool operator==(const ScenarioConfig&) const = default;
};

// Airtimes derived from a scenario. t_p covers the whole exchange the
// channel is held for: MAC header, PHY header, payload, SIFS, ACK.
// DIFS and propagation delay are accounted for elsewhere.
struct PacketTiming {
    double t_d;     // payload airtime, us
    double t_mach;  // MAC header airtime, us
    double t_ack;   // ACK airtime incl. its preamble, us
    double t_p;     // t_mach + phy_header + t_d + sifs + t_ack, us
    double r_0;     // basic rate carrying the ACK, Mbps
};

// Highest basic rate not exceeding the data rate; the ACK uses it.
double ack_basic_rate(double r_w, const std::vector<double>& basic_rates);

PacketTiming packet_airtime(const ScenarioConfig& cfg);

struct LteTiming {
    double t_on;    // us
    double t_off;   // us
};

// Splits the cycle, optionally checking the LTE-U Forum limits
// (ON within [4, 20] ms, OFF at least 1 ms).
LteTiming lte_timing(const LteDcParams& lte, bool enforce_lteu_limits = false);

} // namespace coex

#endif
