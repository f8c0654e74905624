#include "coex/sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "coex/errors.hpp"

namespace coex {

namespace {

using std::int64_t;

int64_t to_ns(double us) {
    return std::llround(us * 1000.0);
}

constexpr int64_t kFar = INT64_MAX / 4; // "no ON edge coming" sentinel

// Two-sided 95% Student-t critical values, df 1..30; 1.96 beyond.
constexpr double kT95[] = {
    12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
    2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
    2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};

double t95(int df) {
    if (df < 1)
        return 0.0;
    return df <= 30 ? kT95[df - 1] : 1.96;
}

} // namespace

void SimConfig::validate() const {
    scenario.validate();
    if (!(warmup_s >= 0.0))
        throw ConfigError("warmup_s must be >= 0");
    if (!(sim_time_s > warmup_s))
        throw ConfigError("sim_time_s must exceed warmup_s");
}

SimStats run(const SimConfig& cfg, SimTrace* trace) {
    cfg.validate();
    const ScenarioConfig& sc = cfg.scenario;
    const PacketTiming pt = packet_airtime(sc);
    const LteTiming lt = lte_timing(sc.lte, sc.enforce_lteu_limits);

    const int n = sc.n_w;
    const int w0 = sc.wifi.w0;
    const int m = sc.wifi.m;
    const int64_t sigma = to_ns(sc.wifi.sigma);
    const int64_t difs = to_ns(sc.wifi.difs);
    const int64_t t_p = to_ns(pt.t_p);
    const int64_t t_cycle = to_ns(sc.lte.t_cycle);
    const int64_t t_on = to_ns(lt.t_on);
    const int64_t sim_end = to_ns(cfg.sim_time_s * 1e6);
    const int64_t warmup = to_ns(cfg.warmup_s * 1e6);
    const long long payload_bits = 8LL * sc.packet_bytes;
    const bool lte = cfg.lte_enabled && t_on > 0;

    std::mt19937_64 rng(cfg.seed);

    if (trace) {
        trace->backoff_hist.assign(m + 2, {});
        for (int s = 0; s <= m + 1; ++s)
            trace->backoff_hist[s].assign((1LL << std::min(s, m)) * w0, 0);
    }

    std::vector<int> stage(n, 0);
    std::vector<int64_t> counter(n);
    auto draw = [&](int j) {
        int64_t w = (1LL << std::min(stage[j], m)) * w0;
        int64_t v = static_cast<int64_t>(rng() & static_cast<std::uint64_t>(w - 1));
        if (trace)
            ++trace->backoff_hist[stage[j]][v];
        return v;
    };
    for (int j = 0; j < n; ++j)
        counter[j] = draw(j);

    SimStats stats;
    stats.per_station.assign(n, {});
    std::vector<long long> bits(n, 0);
    long long total_bits = 0;

    auto account = [&](int64_t from, int64_t to, bool busy) {
        if (!trace)
            return;
        from = std::clamp<int64_t>(from, 0, sim_end);
        to = std::clamp<int64_t>(to, 0, sim_end);
        if (to > from)
            (busy ? trace->busy_ns : trace->idle_ns) += to - from;
    };
    auto log_event = [&](int64_t t, const char* ev, int station, const std::string& detail) {
        if (trace && trace->record_events) {
            std::ostringstream os;
            os << t << ' ' << ev << ' ' << station << ' ' << detail;
            trace->events.push_back(os.str());
        }
    };

    std::vector<int> txers;
    int64_t t = 0;
    while (t < sim_end) {
        int64_t on_next = kFar;
        if (lte) {
            int64_t cyc = t / t_cycle * t_cycle;
            if (t < cyc + t_on) { // inside an ON burst
                account(t, cyc + t_on, true);
                t = cyc + t_on;
                continue;
            }
            on_next = cyc + t_cycle;
        }

        // DIFS idle, then countdown in sigma slots.
        int64_t t0 = t + difs;
        if (t0 >= on_next) { // ON edge interrupts the DIFS
            account(t, on_next, false);
            account(on_next, on_next + t_on, true);
            t = on_next + t_on;
            continue;
        }

        int64_t cmin = counter[0];
        for (int j = 1; j < n; ++j)
            cmin = std::min(cmin, counter[j]);
        int64_t fire = t0 + cmin * sigma;

        if (fire >= on_next) {
            // Nobody reaches zero strictly before the edge (reaching it
            // exactly at the edge freezes too): burn the whole idle
            // stretch, decrement by the slots actually completed.
            int64_t slots = (on_next - t0) / sigma;
            for (int j = 0; j < n; ++j)
                counter[j] -= slots;
            account(t, on_next, false);
            account(on_next, on_next + t_on, true);
            t = on_next + t_on;
            continue;
        }

        for (int j = 0; j < n; ++j)
            counter[j] -= cmin;
        txers.clear();
        for (int j = 0; j < n; ++j)
            if (counter[j] == 0)
                txers.push_back(j);

        int64_t end_tx = fire + t_p;
        bool cut_by_on = lte && end_tx > on_next; // frame runs into the ON burst
        bool wifi_clash = txers.size() >= 2;
        bool success = !wifi_clash && !cut_by_on;
        bool counted = fire >= warmup && fire < sim_end;

        for (int j : txers) {
            if (counted) {
                StationStats& st = stats.per_station[j];
                ++st.tx_attempts;
                if (wifi_clash)
                    ++st.wifi_wifi_collisions;
                else if (cut_by_on)
                    ++st.lte_edge_collisions;
                else
                    ++st.successes;
                if (success) {
                    bits[j] += payload_bits;
                    total_bits += payload_bits;
                }
            }
            log_event(fire, wifi_clash ? "coll_wifi" : (cut_by_on ? "coll_lte" : "success"),
                      j, "stage=" + std::to_string(stage[j]));
            stage[j] = success || stage[j] == m + 1 ? 0 : stage[j] + 1;
            counter[j] = draw(j);
        }
        if (trace && success)
            trace->success_spans.emplace_back(fire, end_tx);

        int64_t busy_end = cut_by_on ? std::max(end_tx, on_next + t_on) : end_tx;
        account(t, fire, false);
        account(fire, busy_end, true);
        t = busy_end;
    }

    for (const StationStats& st : stats.per_station) {
        stats.tx_attempts += st.tx_attempts;
        stats.successes += st.successes;
        stats.lte_edge_collisions += st.lte_edge_collisions;
        stats.wifi_wifi_collisions += st.wifi_wifi_collisions;
    }
    double window_ns = static_cast<double>(sim_end - warmup);
    for (int j = 0; j < n; ++j) {
        StationStats& st = stats.per_station[j];
        if (st.tx_attempts > 0) {
            st.p_coll_total = static_cast<double>(st.tx_attempts - st.successes) / st.tx_attempts;
            st.p_coll_lte = static_cast<double>(st.lte_edge_collisions) / st.tx_attempts;
        }
        st.tput_wifi = bits[j] * 1000.0 / window_ns; // bits/ns -> Mbps
    }
    if (stats.tx_attempts > 0) {
        stats.p_coll_total = static_cast<double>(stats.tx_attempts - stats.successes) / stats.tx_attempts;
        stats.p_coll_lte = static_cast<double>(stats.lte_edge_collisions) / stats.tx_attempts;
    }
    stats.tput_wifi = total_bits * 1000.0 / window_ns;
    return stats;
}

SimStats aggregate(const std::vector<SimStats>& runs) {
    if (runs.size() < 2)
        throw DomainError("aggregate needs at least 2 runs");
    size_t stations = runs.front().per_station.size();
    for (const SimStats& r : runs)
        if (r.per_station.size() != stations)
            throw DomainError("aggregate: runs disagree on station count");

    SimStats out;
    out.per_station.assign(stations, {});
    double tput_sum = 0.0;
    for (const SimStats& r : runs) {
        out.tx_attempts += r.tx_attempts;
        out.successes += r.successes;
        out.lte_edge_collisions += r.lte_edge_collisions;
        out.wifi_wifi_collisions += r.wifi_wifi_collisions;
        tput_sum += r.tput_wifi;
        for (size_t j = 0; j < stations; ++j) {
            StationStats& st = out.per_station[j];
            const StationStats& in = r.per_station[j];
            st.tx_attempts += in.tx_attempts;
            st.successes += in.successes;
            st.lte_edge_collisions += in.lte_edge_collisions;
            st.wifi_wifi_collisions += in.wifi_wifi_collisions;
            st.tput_wifi += in.tput_wifi / runs.size();
        }
    }
    for (StationStats& st : out.per_station) {
        if (st.tx_attempts > 0) {
            st.p_coll_total = static_cast<double>(st.tx_attempts - st.successes) / st.tx_attempts;
            st.p_coll_lte = static_cast<double>(st.lte_edge_collisions) / st.tx_attempts;
        }
    }
    if (out.tx_attempts > 0) {
        out.p_coll_total = static_cast<double>(out.tx_attempts - out.successes) / out.tx_attempts;
        out.p_coll_lte = static_cast<double>(out.lte_edge_collisions) / out.tx_attempts;
    }
    out.tput_wifi = tput_sum / runs.size();

    double var = 0.0;
    for (const SimStats& r : runs) {
        double d = r.tput_wifi - out.tput_wifi;
        var += d * d;
    }
    var /= runs.size() - 1;
    out.ci95_tput = t95(static_cast<int>(runs.size()) - 1) *
                    std::sqrt(var / runs.size());
    return out;
}

} // namespace coex
