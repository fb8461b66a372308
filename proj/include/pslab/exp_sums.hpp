#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pslab/rational.hpp"

namespace pslab::expsums {

// Exact-rational exponent pair (kappa, ell).
struct ExponentPair {
    Rational kappa;
    Rational ell;
};

inline ExponentPair trivial_pair() { return {Rational(0), Rational(1)}; }

// A: (k, l) -> (k/(2k+2), (k+l+1)/(2k+2));  B: (k, l) -> (l - 1/2, k + 1/2).
ExponentPair apply_process(const ExponentPair& pair, char proc);

// Word over {A, B}, a letter optionally followed by a decimal repeat count
// ("BA3B" = B A A A B), applied right-to-left to `start`.
ExponentPair apply_word(std::string_view word, const ExponentPair& start = trivial_pair());

// Direct evaluation of sum_{a < n <= b} e(f(n)) for the monomial phase
// f(n) = amp * (n/a)^expnt, together with the exponent-pair bound
// lambda1^kappa a^ell + lambda1^{-1}, lambda1 = |amp*expnt|/a.
struct MonomialSum {
    std::complex<double> sum;
    double bound;
    double lambda1;
};
MonomialSum monomial_exp_sum(uint64_t a, uint64_t b, double amp, double expnt,
                             const ExponentPair& pair);

// Max over samples of |psi(t) + sum_{0<h<=H} sin(2 pi t h)/(pi h)| divided by
// min(1, 1/(H ||t||)).  Integer samples are skipped.
double psi_truncation_check(std::span<const double> t_samples, int H);

// Deterministic sample set for the truncation check.
std::vector<double> psi_samples(size_t count, uint64_t seed);

// Brute-force count of sextuples h_i ~ J, l_i ~ L, d_i ~ D with
// |h1 l1^{1/gamma}/d1 - h2 l2^{1/gamma}/d2| < delta, plus the bound
// (JD)^eps (JDL + delta D^3 J L^{2-1/gamma}) at eps = 0.05.
struct LatticeCount {
    uint64_t count;
    double bound;
};
LatticeCount lattice_count_oracle(int J, int L, int D, double delta, double gamma,
                                  bool strict = true);

// S = sum_{h~H} sum_{n~N} |sum_{m~M} e(X (m/M)^alpha (h/H)^beta (n/N)^gamma_e)|
// against (HNM)^{1+eps} ((X/(HNM^2))^{1/4} + M^{-1/2} + X^{-1}), eps = 0.05.
struct TrilinearSum {
    double S;
    double bound;
};
TrilinearSum trilinear_sum_check(int H, int N, int M, double Xamp, double alpha,
                                 double beta, double gamma_e);

}  // namespace pslab::expsums
