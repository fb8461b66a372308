#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pslab/params.hpp"

namespace pslab::partition {

// Target window for the partial products p_{i1}...p_{ik} of an 8-prime
// member, as exponents of X.
struct WindowConstants {
    double alpha0 = 0.6395925926;
    double beta0 = 0.78378703702;
};

struct SubsetHit {
    bool hit;
    unsigned mask;  // first hit in popcount-then-lexicographic order; 0 if none
    double sum;     // subset sum of the witness (0 if none)
    double margin;  // max over proper nonempty subsets of min(sum-a0, b0-sum)
};

// Scans all nonempty proper subsets of the 8 coordinates.
SubsetHit subset_hit(const std::array<double, 8>& t, const WindowConstants& w = {});

struct CertReport {
    uint64_t points_checked;
    std::vector<std::array<double, 8>> counterexamples;  // expected empty
    double min_margin;  // min over points of the per-point margin (margin mode)
    double step;
    double eta_s;
};

// Enumerates every nondecreasing 8-tuple on the grid t_i = k_i * step with
// t_i >= 1/17.41 and 1 - eta_s <= sum t_i <= 1, asserting a subset hit for
// each.  Counterexamples are returned for audit, never silently dropped.
// With compute_margin = false the scan certifies hits only (shared prefix
// sums let whole ranges of the last coordinate pass at once) and
// min_margin is reported as +infinity.
CertReport exhaustive_certify(double step, double eta_s, const WindowConstants& w = {},
                              int workers = 2, bool compute_margin = true);

struct WindowSlack {
    double left_slack;   // alpha0 - (5 - 5 gamma + 4 xi + eta)
    double right_slack;  // (gamma + xi + 2)/4 - eta - beta0
    bool pass;
};

WindowSlack window_inside_analytic(const params::GammaParams& p,
                                   const WindowConstants& w = {});

}  // namespace pslab::partition
