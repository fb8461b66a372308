#pragma once

#include <cstdint>

namespace pslab::pscounts {

// floor(p^(1/gamma)) for p >= 2, gamma in [1/2, 1).  The candidate from
// long-double exponentiation is verified through the equivalence
// k <= p^{1/gamma}  <=>  gamma log k <= log p, evaluated as an interval;
// undecided comparisons escalate to binary128 and finally raise
// precision_error rather than ever returning a wrong floor.  Exact integer
// exponents (1/gamma integral, e.g. gamma = 1/2) short-circuit to integer
// powers.
uint64_t floor_root_pow(uint64_t p, double gamma);

// floor(n^gamma) for n >= 1, gamma in (0, 1), same verification scheme.
uint64_t floor_pow(uint64_t n, double gamma);

// ceil(n^gamma); raises precision_error if n^gamma is provably integral
// within the refinement limit (cannot happen for the gammas used here).
uint64_t ceil_pow(uint64_t n, double gamma);

// sign of a*log(m) - log(q):  -1, 0 never returned (escalates), +1.
// Exposed for the boundary comparisons q >= x^{1/17.41} and q < x^{1/u}.
int cmp_pow_log(double a, uint64_t m, uint64_t q);

}  // namespace pslab::pscounts
