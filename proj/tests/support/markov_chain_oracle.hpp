#ifndef COEX_TESTS_MARKOV_CHAIN_ORACLE_HPP
#define COEX_TESTS_MARKOV_CHAIN_ORACLE_HPP

// Reference transmission probability from the explicit backoff Markov
// chain: states (stage j, counter k), j = 0..m+1 with the top window
// repeated once before the frame is dropped. The stationary distribution
// is solved numerically (sparse LU), no closed form involved.

namespace oracle {

// Sum of the stationary probabilities of all (j, 0) states given the
// per-attempt collision probability p_c.
double chain_tau(double p_c, int w0, int m);

} // namespace oracle

#endif
