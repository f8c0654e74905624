#include "coex/params.hpp"

#include <algorithm>
#include <sstream>

#include "coex/errors.hpp"

namespace coex {

namespace {

bool is_power_of_two(int v) {
    return v > 0 && (v & (v - 1)) == 0;
}

[[noreturn]] void fail(const std::string& what) {
    throw ConfigError(what);
}

} // namespace

void WifiMacParams::validate() const {
    if (!is_power_of_two(w0) || w0 < 2)
        fail("wifi.w0 must be a power of two >= 2");
    if (m < 0)
        fail("wifi.m must be >= 0");
    if (sigma <= 0 || difs <= 0 || sifs <= 0 || phy_header <= 0)
        fail("wifi slot/DIFS/SIFS/PHY-header durations must be positive");
    if (delta < 0)
        fail("wifi.delta must be >= 0");
    if (mac_header_bytes <= 0 || ack_bytes <= 0)
        fail("wifi header/ACK byte counts must be positive");
    if (ack_extra < 0)
        fail("wifi.ack_extra must be >= 0");
    if (basic_rates.empty())
        fail("wifi.basic_rates must be nonempty");
    if (!std::is_sorted(basic_rates.begin(), basic_rates.end()))
        fail("wifi.basic_rates must be sorted ascending");
    if (basic_rates.front() <= 0)
        fail("wifi.basic_rates must be positive");
}

void LteDcParams::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0))
        fail("lte.alpha must lie strictly between 0 and 1");
    if (t_cycle <= 0)
        fail("lte.t_cycle must be positive");
    if (r_l <= 0)
        fail("lte.r_l must be positive");
}

void ScenarioConfig::validate() const {
    wifi.validate();
    lte.validate();
    if (n_w < 1)
        fail("n_w must be >= 1");
    if (packet_bytes <= 0)
        fail("packet_bytes must be positive");
    if (r_w <= 0)
        fail("r_w must be positive");
    if (r_w < wifi.basic_rates.front()) {
        std::ostringstream os;
        os << "r_w=" << r_w << " Mbps is below the lowest basic rate "
           << wifi.basic_rates.front() << " Mbps";
        fail(os.str());
    }
    lte_timing(lte, enforce_lteu_limits);
}

double ack_basic_rate(double r_w, const std::vector<double>& basic_rates) {
    double best = -1.0;
    for (double r : basic_rates)
        if (r <= r_w && r > best)
            best = r;
    if (best < 0) {
        std::ostringstream os;
        os << "no basic rate at or below r_w=" << r_w << " Mbps";
        throw ConfigError(os.str());
    }
    return best;
}

PacketTiming packet_airtime(const ScenarioConfig& cfg) {
    PacketTiming t{};
    t.r_0 = ack_basic_rate(cfg.r_w, cfg.wifi.basic_rates);
    t.t_d = cfg.packet_bytes * 8.0 / cfg.r_w;
    t.t_mach = cfg.wifi.mac_header_bytes * 8.0 / cfg.r_w;
    t.t_ack = cfg.wifi.ack_bytes * 8.0 / t.r_0 + cfg.wifi.ack_extra;
    t.t_p = t.t_mach + cfg.wifi.phy_header + t.t_d + cfg.wifi.sifs + t.t_ack;
    return t;
}

LteTiming lte_timing(const LteDcParams& lte, bool enforce_lteu_limits) {
    LteTiming t{lte.t_on(), lte.t_off()};
    if (enforce_lteu_limits) {
        std::ostringstream os;
        if (t.t_on < 4000.0) {
            os << "LTE-U limit violated: T_on=" << t.t_on << " us < 4000 us minimum";
            fail(os.str());
        }
        if (t.t_on > 20000.0) {
            os << "LTE-U limit violated: T_on=" << t.t_on << " us > 20000 us maximum";
            fail(os.str());
        }
        if (t.t_off < 1000.0) {
            os << "LTE-U limit violated: T_off=" << t.t_off << " us < 1000 us minimum";
            fail(os.str());
        }
    }
    return t;
}

} // namespace coex
