#include "coex/throughput.hpp"

#include <cmath>
#include <sstream>

#include "coex/errors.hpp"

namespace coex {

double prob_any_tx(double tau, int n_w) {
    if (n_w < 1)
        throw DomainError("prob_any_tx: station count must be >= 1");
    if (!(tau >= 0.0 && tau <= 1.0))
        throw DomainError("prob_any_tx: tau must lie in [0,1]");
    if (tau == 1.0)
        return 1.0;
    // 1-(1-tau)^n without the cancellation near tau=0.
    return -std::expm1(n_w * std::log1p(-tau));
}

double prob_success_given_tx(double tau, int n_w) {
    if (n_w < 1)
        throw DomainError("prob_success_given_tx: station count must be >= 1");
    if (!(tau >= 0.0 && tau <= 1.0))
        throw DomainError("prob_success_given_tx: tau must lie in [0,1]");
    if (n_w == 1 || tau == 0.0)
        return 1.0;
    return n_w * tau * std::pow(1.0 - tau, n_w - 1) / prob_any_tx(tau, n_w);
}

double lte_throughput(double alpha, double r_l) {
    return 13.0 / 14.0 * alpha * r_l;
}

double wifi_only_throughput(int n, const ScenarioConfig& cfg) {
    if (n < 1)
        throw DomainError("wifi_only_throughput: station count must be >= 1");
    PacketTiming pt = packet_airtime(cfg);
    FixedPointSolution fp = solve_wifi_only(n, cfg.wifi.w0, cfg.wifi.m);
    double p_tr = prob_any_tx(fp.tau, n);
    double p_s = prob_success_given_tx(fp.tau, n);
    // Successful and collided exchanges hold the channel for the same
    // span here: data, SIFS, ACK slot (nobody else ACKs), DIFS, and the
    // propagation delays either side.
    double t_sw = pt.t_mach + cfg.wifi.phy_header + pt.t_d + cfg.wifi.sifs +
                  cfg.wifi.delta + pt.t_ack + cfg.wifi.difs + cfg.wifi.delta;
    double t_cw = t_sw;
    double denom = (1.0 - p_tr) * cfg.wifi.sigma + p_tr * (1.0 - p_s) * t_cw +
                   p_tr * p_s * t_sw;
    return p_tr * p_s * pt.t_d * cfg.r_w / denom;
}

CoexEvaluation evaluate_coex(const ScenarioConfig& cfg, BackoffSumTable* table) {
    cfg.validate();

    CoexEvaluation ev;
    ev.timing = packet_airtime(cfg);
    ev.lte = lte_timing(cfg.lte, cfg.enforce_lteu_limits);
    ev.geom = off_period_geometry(ev.lte.t_off, ev.timing, cfg.wifi.difs,
                                  cfg.wifi.sigma, cfg.wifi.w0);

    BackoffSumTable local(cfg.wifi.w0);
    BackoffSumTable& tab = table ? *table : local;

    double p_cwl = collision_prob_lte(ev.geom, cfg.wifi.w0, tab);
    if (p_cwl >= 1.0) {
        // Every OFF period kills the first frame (nothing fits); the
        // coupled solve has no interior to work with, so take tau at the
        // left limit of the collision-probability domain.
        ev.fp = {tau_from_pc(std::nextafter(1.0, 0.0), cfg.wifi.w0, cfg.wifi.m),
                 1.0, 0, 0.0};
    } else {
        ev.fp = solve_coex(cfg.n_w, p_cwl, cfg.wifi.w0, cfg.wifi.m);
    }

    double p_trw = prob_any_tx(ev.fp.tau, cfg.n_w);
    double p_sw = prob_success_given_tx(ev.fp.tau, cfg.n_w);

    ev.dist = cfg.n_w == 1
                  ? off_period_distributions_single(ev.geom, cfg.wifi.w0, &tab)
                  : off_period_distributions_multi(ev.geom, cfg.wifi.w0, p_trw, &tab);

    ev.report.p_trw = p_trw;
    ev.report.p_sw = p_sw;
    ev.report.e_n = ev.dist.e_n;
    ev.report.p_c_total = ev.fp.p_coll;
    ev.report.tput_wifi_coex =
        ev.dist.e_n * ev.timing.t_d * p_sw / cfg.lte.t_cycle * cfg.r_w;
    ev.report.tput_lte = lte_throughput(cfg.lte.alpha, cfg.lte.r_l);
    ev.report.tput_wifi_only = wifi_only_throughput(cfg.n_w, cfg);
    return ev;
}

double wifi_coex_throughput(const ScenarioConfig& cfg) {
    return evaluate_coex(cfg).report.tput_wifi_coex;
}

namespace {

struct GridBest {
    double alpha = 0.0;
    double resid = 0.0;
    double metric = 0.0;
    bool set = false;
};

void consider(GridBest& best, double alpha, double metric, double target) {
    double resid = std::abs(metric - target);
    if (!best.set || resid < best.resid ||
        (resid == best.resid && alpha < best.alpha)) {
        best = {alpha, resid, metric, true};
    }
}

FairnessResult fair_alpha(const ScenarioConfig& cfg, int n_w, FairnessMode mode,
                          const FairnessOptions& opts) {
    if (n_w < 1)
        throw DomainError("fairness: station count must be >= 1");
    if (!(opts.coarse_step > 0) || !(opts.fine_step > 0) ||
        opts.fine_step > opts.coarse_step)
        throw ConfigError("fairness: need 0 < fine_step <= coarse_step");

    ScenarioConfig work = cfg;
    work.n_w = n_w;

    int n_ref = opts.reference_stations > 0 ? opts.reference_stations : 2 * n_w;
    double target = mode == FairnessMode::access
                        ? solve_wifi_only(n_ref, work.wifi.w0, work.wifi.m).tau
                        : 0.5 * wifi_only_throughput(n_ref, work);

    double lo = opts.coarse_step;
    double hi = 1.0 - opts.coarse_step;
    if (work.enforce_lteu_limits) {
        lo = std::max(lo, 4000.0 / work.lte.t_cycle);
        hi = std::min({hi, 20000.0 / work.lte.t_cycle, 1.0 - 1000.0 / work.lte.t_cycle});
        if (lo > hi) {
            std::ostringstream os;
            os << "LTE-U limits leave no admissible duty cycle for t_cycle="
               << work.lte.t_cycle << " us";
            throw ConfigError(os.str());
        }
    }

    BackoffSumTable table(work.wifi.w0);
    auto metric_at = [&](double alpha) {
        work.lte.alpha = alpha;
        CoexEvaluation ev = evaluate_coex(work, &table);
        return mode == FairnessMode::access ? ev.fp.tau : ev.report.tput_wifi_coex;
    };

    GridBest best;
    long long n_coarse = static_cast<long long>((hi - lo) / opts.coarse_step) + 1;
    for (long long i = 0; i <= n_coarse; ++i) {
        double alpha = std::min(lo + i * opts.coarse_step, hi);
        consider(best, alpha, metric_at(alpha), target);
        if (alpha >= hi)
            break;
    }

    double flo = std::max(lo, best.alpha - opts.coarse_step);
    double fhi = std::min(hi, best.alpha + opts.coarse_step);
    long long n_fine = static_cast<long long>((fhi - flo) / opts.fine_step) + 1;
    for (long long i = 0; i <= n_fine; ++i) {
        double alpha = std::min(flo + i * opts.fine_step, fhi);
        consider(best, alpha, metric_at(alpha), target);
        if (alpha >= fhi)
            break;
    }

    FairnessResult r;
    r.alpha_star = best.alpha;
    r.objective_residual = best.resid;
    r.metric_at_optimum = best.metric;
    r.target = target;
    r.boundary = best.alpha - lo < 0.5 * opts.fine_step ||
                 hi - best.alpha < 0.5 * opts.fine_step;
    return r;
}

} // namespace

FairnessResult access_fair_alpha(const ScenarioConfig& cfg, int n_w,
                                 const FairnessOptions& opts) {
    return fair_alpha(cfg, n_w, FairnessMode::access, opts);
}

FairnessResult throughput_fair_alpha(const ScenarioConfig& cfg, int n_w,
                                     const FairnessOptions& opts) {
    return fair_alpha(cfg, n_w, FairnessMode::throughput, opts);
}

} // namespace coex
