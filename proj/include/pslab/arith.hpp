#pragma once

#include <cstdint>
#include <vector>

#include "pslab/factor_sieve.hpp"

namespace pslab::arith {

// von Mangoldt Lambda(n): log p when n = p^k, else 0.  Standalone
// (trial-division) evaluation; sieve-backed callers use FactorSieve::lambda.
double lambda_of(uint64_t n);

// Moebius mu(n) by trial division.
int mu_of(uint64_t n);

// Omega(n): number of prime factors with multiplicity, by trial division.
int omega_of(uint64_t n);

// One signed term of the 2j-fold factorisation sum.
struct HbTerm {
    int j;                          // 1..3
    std::vector<uint64_t> factors;  // m_1 .. m_{2j}
    double weight;                  // binom(3,j)(-1)^{j-1} mu(m_1)..mu(m_j) log m_{2j}
};

// Evaluates the triple-signed divisor sum that reconstructs Lambda(n) on a
// dyadic window: n in (X/2, X], the mu-carrying factors m_1..m_j capped at
// X^{1/3}.  Returns the sum; equals Lambda(n) up to floating error.
double heath_brown_lambda(uint64_t n, uint64_t X);

// Same evaluation but exposing every enumerated term (for audits/tests).
double heath_brown_lambda_terms(uint64_t n, uint64_t X, std::vector<HbTerm>* terms);

// prod_{p < z} (1 - 1/p)
double mertens_product(uint64_t z);

}  // namespace pslab::arith
