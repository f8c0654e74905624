#include "coex/dcf.hpp"

#include <cmath>
#include <sstream>

#include "coex/errors.hpp"

namespace coex {

namespace {

// Collision probability of one station given everyone else's tau and the
// standalone interferer collision probability (0 for Wi-Fi only).
double coupled_pc(double tau, int n, double p_ext) {
    return 1.0 - std::pow(1.0 - tau, n - 1) * (1.0 - p_ext);
}

constexpr double kTol = 1e-10;
constexpr int kMaxIter = 10000;

FixedPointSolution solve_fixed_point(int n, double p_ext, int w0, int m) {
    auto step = [&](double tau) { return tau_from_pc(coupled_pc(tau, n, p_ext), w0, m); };

    // Damped iteration converges quickly everywhere we have ever seen;
    // bisection below is the safety net, not the usual path.
    double tau = 2.0 / (w0 + 1.0);
    int it = 0;
    for (; it < kMaxIter; ++it) {
        double next = step(tau);
        double residual = std::abs(tau - next);
        if (residual <= kTol)
            return {next, coupled_pc(next, n, p_ext), it + 1, std::abs(next - step(next))};
        tau = 0.5 * tau + 0.5 * next;
    }

    // g(tau) = tau - step(tau) is continuous, negative near 0 and
    // positive near 1, so a sign-change bracket always exists.
    double lo = 1e-15, hi = 1.0 - 1e-15;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid - step(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    double root = 0.5 * (lo + hi);
    double residual = std::abs(root - step(root));
    if (residual > 1e-9) {
        std::ostringstream os;
        os << "fixed-point solve failed: n=" << n << " p_ext=" << p_ext
           << " w0=" << w0 << " m=" << m << " residual=" << residual;
        throw SolverError(os.str());
    }
    return {root, coupled_pc(root, n, p_ext), kMaxIter, residual};
}

} // namespace

double tau_from_pc(double p_c, int w0, int m) {
    if (!(p_c >= 0.0 && p_c < 1.0))
        throw DomainError("collision probability must lie in [0,1)");

    // Geometric sums written as running products so the p_c = 1/2 pole of
    // the textbook closed form cancels instead of dividing 0 by 0:
    //   doubling = sum_{i=0}^{m} (2 p)^i
    //   norm     = sum_{j=0}^{m+1} p^j
    double doubling = 1.0, term2p = 1.0;
    for (int i = 1; i <= m; ++i) {
        term2p *= 2.0 * p_c;
        doubling += term2p;
    }
    double norm = 1.0, termp = 1.0;
    for (int j = 1; j <= m + 1; ++j) {
        termp *= p_c;
        norm += termp;
    }
    // termp now holds p^{m+1}, the weight of the final (drop) stage,
    // whose window stayed at 2^m * w0.
    double a = (doubling + std::ldexp(termp, m)) / norm;
    return 2.0 / (w0 * a + 1.0);
}

FixedPointSolution solve_wifi_only(int n, int w0, int m) {
    if (n < 1)
        throw DomainError("station count must be >= 1");
    if (n == 1)
        return {tau_from_pc(0.0, w0, m), 0.0, 0, 0.0};
    return solve_fixed_point(n, 0.0, w0, m);
}

FixedPointSolution solve_coex(int n_w, double p_cwl, int w0, int m) {
    if (n_w < 1)
        throw DomainError("station count must be >= 1");
    if (!(p_cwl >= 0.0) || p_cwl >= 1.0)
        throw DomainError("interferer collision probability must lie in [0,1)");
    if (n_w == 1)
        return {tau_from_pc(p_cwl, w0, m), p_cwl, 0, 0.0};
    return solve_fixed_point(n_w, p_cwl, w0, m);
}

} // namespace coex
