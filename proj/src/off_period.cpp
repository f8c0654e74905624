#include "coex/off_period.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coex/errors.hpp"

namespace coex {

namespace {

// Guard against quotients that are mathematically integral but land a few
// ulps off after the divisions; 1e-9 slots is far below any real timing.
constexpr double kFloorEps = 1e-9;

// floor(num/den), counting an exact integer quotient as reached.
long long floor_quot(double num, double den) {
    return static_cast<long long>(std::floor(num / den + kFloorEps));
}

// Largest integer strictly below num/den: an exact integer quotient is
// NOT reached. Used for "starts strictly before the edge" bounds.
long long strict_floor_quot(double num, double den) {
    return static_cast<long long>(std::ceil(num / den - kFloorEps)) - 1;
}

void check_k(int k, const OffPeriodGeometry& g, const char* who) {
    if (k < 1 || k > g.n_k + 1) {
        std::ostringstream os;
        os << who << ": packet index " << k << " outside 1.." << g.n_k + 1;
        throw DomainError(os.str());
    }
}

} // namespace

long long OffPeriodGeometry::lb(int k) const {
    check_k(k, *this, "lb");
    return l_b[k - 1];
}

long long OffPeriodGeometry::ub(int k) const {
    check_k(k, *this, "ub");
    return u_b[k - 1];
}

long long OffPeriodGeometry::ws(int k) const {
    check_k(k, *this, "ws");
    return w_s[k - 1];
}

OffPeriodGeometry off_period_geometry(double t_off, const PacketTiming& timing,
                                      double difs, double sigma, int w0) {
    if (t_off <= 0 || timing.t_p <= 0 || sigma <= 0 || difs <= 0)
        throw DomainError("off-period geometry needs positive t_off, t_p, difs, sigma");

    OffPeriodGeometry g;
    g.n_k = static_cast<int>(floor_quot(t_off, timing.t_p));
    int entries = g.n_k + 1;
    g.l_b.reserve(entries);
    g.u_b.reserve(entries);
    g.w_s.reserve(entries);
    for (int k = 1; k <= entries; ++k) {
        g.l_b.push_back(floor_quot(t_off - k * (timing.t_p + difs), sigma));
        g.u_b.push_back(strict_floor_quot(t_off - (k - 1) * timing.t_p - k * difs, sigma));
        g.w_s.push_back(static_cast<long long>(k - 1) * w0 - 1);
    }
    return g;
}

std::vector<double> uniform_sum_pmf(int count, int w0) {
    if (count < 0)
        throw DomainError("uniform_sum_pmf: count must be >= 0");
    if (w0 < 1)
        throw DomainError("uniform_sum_pmf: w0 must be >= 1");

    std::vector<double> pmf{1.0};
    for (int c = 0; c < count; ++c) {
        std::vector<double> next(pmf.size() + w0 - 1, 0.0);
        for (size_t x = 0; x < pmf.size(); ++x) {
            double share = pmf[x] / w0;
            for (int j = 0; j < w0; ++j)
                next[x + j] += share;
        }
        pmf = std::move(next);
    }
    return pmf;
}

BackoffSumTable::BackoffSumTable(int w0) : w0_(w0) {
    if (w0 < 1)
        throw DomainError("BackoffSumTable: w0 must be >= 1");
    prefix_.push_back({1.0}); // count=0: point mass at 0
}

void BackoffSumTable::ensure(int count) {
    while (static_cast<int>(prefix_.size()) <= count) {
        int c = static_cast<int>(prefix_.size());
        std::vector<double> pmf = uniform_sum_pmf(c, w0_);
        std::vector<double> pre(pmf.size());
        double acc = 0.0;
        for (size_t x = 0; x < pmf.size(); ++x) {
            acc += pmf[x];
            pre[x] = acc;
        }
        prefix_.push_back(std::move(pre));
    }
}

double BackoffSumTable::interval(int count, long long lo, long long hi) {
    if (count < 0)
        throw DomainError("BackoffSumTable::interval: count must be >= 0");
    ensure(count);
    const std::vector<double>& pre = prefix_[count];
    long long last = static_cast<long long>(pre.size()) - 1;
    if (hi < lo || hi < 0 || lo > last)
        return 0.0;
    lo = std::max<long long>(lo, 0);
    hi = std::min(hi, last);
    double upper = pre[hi];
    double lower = lo == 0 ? 0.0 : pre[lo - 1];
    return upper - lower;
}

double hit_prob(int k, const OffPeriodGeometry& geom, int w0, BackoffSumTable& table) {
    check_k(k, geom, "hit_prob");
    long long lb = geom.lb(k);
    long long ub = geom.ub(k);
    long long first_max = 2LL * w0 - 1; // first packet draws from {0..2w0-1}

    if (k == 1) {
        long long lo = std::max<long long>(0, lb + 1);
        long long hi = std::min(first_max, ub);
        if (hi < lo)
            return 0.0;
        return static_cast<double>(hi - lo + 1) / (2.0 * w0);
    }

    long long ws = geom.ws(k);
    double acc = 0.0;
    long long z1_hi = std::min(first_max, ub);
    for (long long z1 = 0; z1 <= z1_hi; ++z1) {
        long long lo = std::max<long long>(0, lb - z1 + 1);
        long long hi = std::min(ws, ub - z1);
        acc += table.interval(k - 1, lo, hi);
    }
    return acc / (2.0 * w0);
}

double hit_prob(int k, const OffPeriodGeometry& geom, int w0) {
    BackoffSumTable table(w0);
    return hit_prob(k, geom, w0, table);
}

double collision_prob_lte(const OffPeriodGeometry& geom, int w0, BackoffSumTable& table) {
    double acc = 0.0;
    for (int k = 1; k <= geom.n_k + 1; ++k)
        acc += hit_prob(k, geom, w0, table) / k;
    return acc;
}

double collision_prob_lte(const OffPeriodGeometry& geom, int w0) {
    BackoffSumTable table(w0);
    return collision_prob_lte(geom, w0, table);
}

double success_seq_single(int k, const OffPeriodGeometry& geom, int w0,
                          BackoffSumTable& table) {
    if (k < 1 || k > geom.n_k) {
        std::ostringstream os;
        os << "success_seq_single: packet index " << k << " outside 1.." << geom.n_k;
        throw DomainError(os.str());
    }
    long long lb = geom.lb(k);
    long long first_max = 2LL * w0 - 1;

    if (k == 1) {
        if (lb < 0)
            return 0.0;
        return static_cast<double>(std::min(first_max, lb) + 1) / (2.0 * w0);
    }

    long long ws = geom.ws(k);
    double acc = 0.0;
    long long z1_hi = std::min(first_max, geom.ub(k));
    for (long long z1 = 0; z1 <= z1_hi; ++z1)
        acc += table.interval(k - 1, 0, std::min(ws, lb - z1));
    return acc / (2.0 * w0);
}

double success_seq_single(int k, const OffPeriodGeometry& geom, int w0) {
    BackoffSumTable table(w0);
    return success_seq_single(k, geom, w0, table);
}

double negbin_tail(int k, double p_trw, long long limit) {
    if (k < 1)
        throw DomainError("negbin_tail: k must be >= 1");
    if (!(p_trw > 0.0 && p_trw <= 1.0))
        throw DomainError("negbin_tail: p_trw must lie in (0,1]");
    if (limit < 0)
        return 0.0;
    if (p_trw == 1.0)
        return 1.0; // all k draws are zero

    double q = 1.0 - p_trw;
    double log_start = k * std::log(p_trw);

    if (log_start > -700.0) {
        // term_i = C(i+k-1, k-1) p^k q^i via the ratio (k-1+i)/i * q.
        double term = std::exp(log_start);
        double sum = term;
        for (long long i = 1; i <= limit; ++i) {
            term *= q * (k - 1.0 + i) / i;
            sum += term;
            // Past the mode the terms only shrink; stop once they can no
            // longer move the sum at double precision.
            if (i > (k - 1.0) * q / p_trw && term < sum * 1e-18)
                break;
        }
        return std::min(sum, 1.0);
    }

    // p^k underflows: accumulate in log space instead.
    double log_term = log_start;
    double log_sum = log_term;
    for (long long i = 1; i <= limit; ++i) {
        log_term += std::log(q) + std::log1p((k - 1.0) / i);
        double hi = std::max(log_sum, log_term);
        log_sum = hi + std::log(std::exp(log_sum - hi) + std::exp(log_term - hi));
        if (i > (k - 1.0) * q / p_trw && log_term < log_sum - 45.0)
            break;
    }
    return std::exp(std::min(log_sum, 0.0));
}

double success_seq_multi(int k, double p_trw, const OffPeriodGeometry& geom) {
    if (k < 1 || k > geom.n_k) {
        std::ostringstream os;
        os << "success_seq_multi: packet index " << k << " outside 1.." << geom.n_k;
        throw DomainError(os.str());
    }
    return negbin_tail(k, p_trw, geom.lb(k) - k);
}

double expected_packets(const std::vector<double>& succ, int n_k) {
    if (n_k < 0 || static_cast<size_t>(n_k) > succ.size())
        throw DomainError("expected_packets: succ array shorter than n_k");
    double e_n = 0.0;
    for (int k = 1; k <= n_k; ++k) {
        double here = succ[k - 1];
        double next = k < n_k ? succ[k] : 0.0;
        if (next > here + 1e-12) {
            std::ostringstream os;
            os << "success probabilities not nonincreasing: P'_s(" << k << ")=" << here
               << " < P'_s(" << k + 1 << ")=" << next;
            throw ModelConsistencyError(os.str());
        }
        e_n += k * (here - next);
    }
    return e_n;
}

namespace {

OffPeriodDistributions distributions_common(const OffPeriodGeometry& geom, int w0,
                                            BackoffSumTable& table) {
    OffPeriodDistributions d;
    d.hit.reserve(geom.n_k + 1);
    for (int k = 1; k <= geom.n_k + 1; ++k)
        d.hit.push_back(hit_prob(k, geom, w0, table));
    d.p_cwl = 0.0;
    for (int k = 1; k <= geom.n_k + 1; ++k)
        d.p_cwl += d.hit[k - 1] / k;
    return d;
}

} // namespace

OffPeriodDistributions off_period_distributions_single(const OffPeriodGeometry& geom,
                                                       int w0, BackoffSumTable* table) {
    BackoffSumTable local(w0);
    BackoffSumTable& t = table ? *table : local;
    OffPeriodDistributions d = distributions_common(geom, w0, t);
    d.succ.reserve(geom.n_k);
    for (int k = 1; k <= geom.n_k; ++k)
        d.succ.push_back(success_seq_single(k, geom, w0, t));
    d.e_n = expected_packets(d.succ, geom.n_k);
    return d;
}

OffPeriodDistributions off_period_distributions_multi(const OffPeriodGeometry& geom,
                                                      int w0, double p_trw,
                                                      BackoffSumTable* table) {
    BackoffSumTable local(w0);
    BackoffSumTable& t = table ? *table : local;
    OffPeriodDistributions d = distributions_common(geom, w0, t);
    d.succ.reserve(geom.n_k);
    for (int k = 1; k <= geom.n_k; ++k)
        d.succ.push_back(success_seq_multi(k, p_trw, geom));
    d.e_n = expected_packets(d.succ, geom.n_k);
    return d;
}

} // namespace coex
