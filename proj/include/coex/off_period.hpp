#ifndef COEX_OFF_PERIOD_HPP
#define COEX_OFF_PERIOD_HPP

#include <vector>

#include "coex/params.hpp"

namespace coex {

// Slot-quantized layout of one LTE OFF period of a given scenario.
// Packet k (1-based) occupies k*(t_p+difs) of airtime plus the backoff
// slots drawn before it; everything is measured in whole slots from the
// start of the OFF period. For each k in 1..n_k+1:
//   lb(k): largest backoff-slot total for which packet k still ends at or
//          before the ON edge (negative if even zero backoff is too much),
//   ub(k): largest backoff-slot total for which packet k still starts
//          strictly before the ON edge,
//   ws(k): largest possible value of the k-1 later backoff draws combined.
struct OffPeriodGeometry {
    int n_k = 0;                 // whole packets that fit: floor(t_off/t_p)
    std::vector<long long> l_b;  // index k-1
    std::vector<long long> u_b;
    std::vector<long long> w_s;

    long long lb(int k) const;
    long long ub(int k) const;
    long long ws(int k) const;
};

OffPeriodGeometry off_period_geometry(double t_off, const PacketTiming& timing,
                                      double difs, double sigma, int w0);

// PMF of the sum of `count` independent uniforms on {0..w0-1};
// count=0 gives the point mass at 0. Index is the sum value.
std::vector<double> uniform_sum_pmf(int count, int w0);

// Lazily built prefix-CDF cache of uniform-sum distributions, shared
// across packet indices and across duty-cycle grid points so repeated
// evaluations cost a table lookup instead of a convolution.
class BackoffSumTable {
public:
    explicit BackoffSumTable(int w0);

    // P(lo <= Z <= hi) where Z is the count-fold uniform sum.
    double interval(int count, long long lo, long long hi);

private:
    void ensure(int count);

    int w0_;
    std::vector<std::vector<double>> prefix_; // prefix_[count][x] = P(Z <= x)
};

// Probability that packet k is the one cut by the ON edge (it starts
// before the edge but does not finish). The first packet of an OFF
// period draws its backoff from {0..2*w0-1}, later ones from {0..w0-1}.
double hit_prob(int k, const OffPeriodGeometry& geom, int w0);
double hit_prob(int k, const OffPeriodGeometry& geom, int w0, BackoffSumTable& table);

// Collision probability inflicted on the Wi-Fi station by the ON edge:
// sum over k of hit(k)/k, since only the last of k transmitted packets
// is lost.
double collision_prob_lte(const OffPeriodGeometry& geom, int w0);
double collision_prob_lte(const OffPeriodGeometry& geom, int w0, BackoffSumTable& table);

// Probability that the first k packets of an OFF period all complete
// before the ON edge, single station (backoffs are uniform draws).
double success_seq_single(int k, const OffPeriodGeometry& geom, int w0);
double success_seq_single(int k, const OffPeriodGeometry& geom, int w0,
                          BackoffSumTable& table);

// P(Z' <= limit) where Z' is the sum of k iid geometric variables on
// {0,1,...} with success parameter p_trw (a negative-binomial tail).
double negbin_tail(int k, double p_trw, long long limit);

// Multi-station analogue of success_seq_single: between packets the
// channel idles a geometric number of slots (some station transmits each
// slot with probability p_trw), so k packets complete iff the combined
// idle time fits under lb(k) after the k deterministic airtimes.
double success_seq_multi(int k, double p_trw, const OffPeriodGeometry& geom);

// E_n = sum over k of k * P(exactly the first k packets complete).
// succ holds P'_s(1..n_k); P'_s(n_k+1) is 0 by construction.
double expected_packets(const std::vector<double>& succ, int n_k);

// Everything the throughput pipeline needs from one OFF-period layout.
struct OffPeriodDistributions {
    std::vector<double> hit;   // p'_h(k), k=1..n_k+1
    std::vector<double> succ;  // P'_s(k), k=1..n_k
    double e_n = 0.0;
    double p_cwl = 0.0;
};

OffPeriodDistributions off_period_distributions_single(const OffPeriodGeometry& geom,
                                                       int w0,
                                                       BackoffSumTable* table = nullptr);

OffPeriodDistributions off_period_distributions_multi(const OffPeriodGeometry& geom,
                                                      int w0, double p_trw,
                                                      BackoffSumTable* table = nullptr);

} // namespace coex

#endif
