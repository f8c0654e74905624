#ifndef COEX_DCF_HPP
#define COEX_DCF_HPP

namespace coex {

// Result of the coupled (tau, collision probability) solve.
struct FixedPointSolution {
    double tau;        // per-slot transmission probability
    double p_coll;     // collision probability seen by one station
    int iterations;
    double residual;   // |tau - tau_from_pc(p_coll(tau))| at the returned point
};

// Per-slot transmission probability of one saturated DCF station that
// sees collision probability p_c, under binary exponential backoff with
// minimum window w0, doubling through stage m, and one extra attempt at
// the top window before the frame is dropped. Continuous on [0,1),
// including the removable singularity at p_c = 1/2.
double tau_from_pc(double p_c, int w0, int m);

// Wi-Fi-only network of n stations: tau and P_c = 1-(1-tau)^{n-1}
// solved jointly.
FixedPointSolution solve_wifi_only(int n, int w0, int m);

// Coexistence network: n_w stations plus a duty-cycled interferer that
// alone would collide a station's frame with probability p_cwl. Solves
// tau against P_ct = 1 - (1-tau)^{n_w-1} * (1-p_cwl). p_cwl = 1 is
// rejected as degenerate.
FixedPointSolution solve_coex(int n_w, double p_cwl, int w0, int m);

} // namespace coex

#endif
