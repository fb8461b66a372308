#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "pslab/factor_sieve.hpp"
#include "pslab/params.hpp"
#include "pslab/pow_floor.hpp"

namespace pslab::pscounts {

// Desk-scale instance: the multiset A = { floor(p^{1/gamma}) : p <= x^gamma },
// enumerated per prime (values may repeat and are counted with multiplicity).
struct PsInstance {
    uint64_t x;
    double gamma;
    params::GammaParams prm;
    uint64_t p_max;         // floor(x^gamma)
    uint64_t z_prime_min;   // smallest integer q with q >= x^{1/17.41}
    uint64_t u_cut;         // largest integer q with q < x^{1/u}
    uint64_t d_max;         // floor(x^xi)
    // full factor table when the span fits the FactorSieve cap, else ops
    // fall back to segmented windows
    std::shared_ptr<const arith::FactorSieve> table;
};

PsInstance make_instance(uint64_t x, double gamma, double eta = 1e-6,
                         double epsilon = 1e-9);

// Streams (p, a = floor(p^{1/gamma})) over primes p <= p_max, ascending.
void for_each_prime_a(const PsInstance& inst,
                      const std::function<void(uint64_t p, uint64_t a)>& fn);

struct RemainderRecord {
    uint64_t d;
    uint64_t card;     // #A_d
    double main_term;  // pi(x^gamma)/d
    double r_d;        // card - main_term
};

// #A_d by direct membership (d | a) and by the floor-difference identity;
// the two paths must agree exactly or a precision_error is raised.
RemainderRecord count_A_d(const PsInstance& inst, uint64_t d);

// All d in [1, d_max] in one pass over the primes.
std::vector<RemainderRecord> count_A_all(const PsInstance& inst, uint64_t d_max);

struct P7Count {
    uint64_t count;           // primes p with Omega(a) <= omega_max (multiset)
    uint64_t distinct_count;  // distinct such a
    uint64_t considered;      // pi(x^gamma)
    uint64_t distinct_a;      // distinct a overall
    double benchmark;         // x^gamma / log^2 x
};

P7Count count_P7(const PsInstance& inst, int omega_max = 7, bool sifted = false);

struct WeightedW {
    double W;                  // the weighted sum over surviving a
    uint64_t survivors;        // #{a : (a, P(z)) = 1}, multiset
    // class decomposition of W (multiset sums of weights)
    double w_omega_le7;
    double w_omega8_sqfree;
    double w_omega_ge9_sqfree;
    double w_nonsquarefree_ge8;
    uint64_t weight_upper_violations;  // squarefree survivors failing W_a < lambda(9 - Omega)
};

WeightedW weighted_W(const PsInstance& inst);

// All m = p1 p2 ... p8 <= x, squarefree, x^{1/17.41} <= p1 < ... < p8,
// ascending after materialisation.
std::vector<uint64_t> enumerate_B(uint64_t x);

struct CurlyX {
    double value;    // sum over B of ((l+1)^gamma - l^gamma)
    double leading;  // sum over B of gamma l^{gamma-1}
    uint64_t members;
};

CurlyX curly_X(const PsInstance& inst);

struct RfrakResult {
    uint64_t d;
    double r_d;        // psi-difference sum over B
    double x_over_d;   // curly_X / d
    uint64_t card_E_d; // direct membership count
};

// Raises precision_error if |card_E_d - (X/d + R_d)| > 1e-6.
RfrakResult remainder_R_frak(const PsInstance& inst, uint64_t d);

}  // namespace pslab::pscounts
