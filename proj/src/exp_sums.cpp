#include "pslab/exp_sums.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pslab/errors.hpp"

namespace pslab::expsums {

ExponentPair apply_process(const ExponentPair& pair, char proc) {
    const Rational& k = pair.kappa;
    const Rational& l = pair.ell;
    if (proc == 'A') {
        Rational den = Rational(2) * k + Rational(2);
        return {k / den, (k + l + Rational(1)) / den};
    }
    if (proc == 'B') {
        Rational half(1, 2);
        return {l - half, k + half};
    }
    throw std::invalid_argument(std::string("apply_process: unknown process '") + proc + "'");
}

ExponentPair apply_word(std::string_view word, const ExponentPair& start) {
    // expand letters + repeat digits into a sequence, then apply right-to-left
    std::vector<char> ops;
    for (size_t i = 0; i < word.size(); ++i) {
        char c = word[i];
        if (c != 'A' && c != 'B')
            throw std::invalid_argument("apply_word: expected 'A' or 'B', got '" +
                                        std::string(1, c) + "'");
        size_t rep = 1;
        if (i + 1 < word.size() && std::isdigit(static_cast<unsigned char>(word[i + 1]))) {
            rep = 0;
            while (i + 1 < word.size() && std::isdigit(static_cast<unsigned char>(word[i + 1]))) {
                rep = rep * 10 + static_cast<size_t>(word[++i] - '0');
            }
            if (rep == 0) throw std::invalid_argument("apply_word: zero repeat count");
            if (rep > 256) throw std::invalid_argument("apply_word: repeat count too large");
        }
        for (size_t r = 0; r < rep; ++r) ops.push_back(c);
    }
    ExponentPair cur = start;
    for (size_t i = ops.size(); i-- > 0;) cur = apply_process(cur, ops[i]);
    return cur;
}

MonomialSum monomial_exp_sum(uint64_t a, uint64_t b, double amp, double expnt,
                             const ExponentPair& pair) {
    if (!(a >= 1 && a < b && b <= 2 * a))
        throw std::domain_error("monomial_exp_sum: need 1 <= a < b <= 2a");
    if (b > 10'000'000)
        throw resource_error("monomial_exp_sum: range limit 1e7");
    MonomialSum out;
    long double re = 0.0L, im = 0.0L;
    const long double ia = static_cast<long double>(a);
    for (uint64_t n = a + 1; n <= b; ++n) {
        long double phase = static_cast<long double>(amp) *
                            std::pow(static_cast<long double>(n) / ia,
                                     static_cast<long double>(expnt));
        long double ang = 2.0L * M_PIl * (phase - std::floor(phase));
        re += std::cos(ang);
        im += std::sin(ang);
    }
    out.sum = {static_cast<double>(re), static_cast<double>(im)};
    out.lambda1 = std::fabs(amp * expnt) / static_cast<double>(a);
    const double kappa = pair.kappa.to_double();
    const double ell = pair.ell.to_double();
    out.bound = std::pow(out.lambda1, kappa) * std::pow(static_cast<double>(a), ell) +
                1.0 / out.lambda1;
    return out;
}

std::vector<double> psi_samples(size_t count, uint64_t seed) {
    std::vector<double> out;
    out.reserve(count);
    uint64_t state = seed;
    while (out.size() < count) {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z = z ^ (z >> 31);
        double t = (z >> 11) * 0x1.0p-53;
        if (t > 1e-9 && t < 1.0 - 1e-9) out.push_back(t);
    }
    return out;
}

double psi_truncation_check(std::span<const double> t_samples, int H) {
    if (H < 2) throw std::domain_error("psi_truncation_check: H must be >= 2");
    double worst = 0.0;
    for (double t : t_samples) {
        double frac = t - std::floor(t);
        if (frac == 0.0) continue;  // ||t|| = 0: skipped
        double psi = frac - 0.5;
        // sum over 0<|h|<=H of e(th)/(2 pi i h) collapses to sin series
        double s = 0.0;
        for (int h = H; h >= 1; --h) s += std::sin(2.0 * M_PI * frac * h) / (M_PI * h);
        double err = std::fabs(psi + s);
        double dist = std::min(frac, 1.0 - frac);
        double g = std::min(1.0, 1.0 / (H * dist));
        worst = std::max(worst, err / g);
    }
    return worst;
}

LatticeCount lattice_count_oracle(int J, int L, int D, double delta, double gamma,
                                  bool strict) {
    if (J > 32 || L > 32 || D > 32)
        throw resource_error("lattice_count_oracle: parameters capped at 32");
    if (J < 2 || L < 2 || D < 2)
        throw std::domain_error("lattice_count_oracle: parameters must be >= 2");
    if (!(gamma > 0.5 && gamma < 1.0))
        throw std::domain_error("lattice_count_oracle: gamma must lie in (1/2, 1)");
    if (delta < 0.0)
        throw std::domain_error("lattice_count_oracle: delta must be >= 0");
    std::vector<double> vals;
    for (int h = J / 2 + 1; h <= J; ++h)
        for (int l = L / 2 + 1; l <= L; ++l)
            for (int d = D / 2 + 1; d <= D; ++d)
                vals.push_back(h * std::pow(static_cast<double>(l), 1.0 / gamma) / d);
    std::sort(vals.begin(), vals.end());
    uint64_t count = 0;
    // window scan: pairs (i, j) with |v_i - v_j| < delta (or <= when probing)
    size_t lo = 0, hi = 0;
    for (size_t i = 0; i < vals.size(); ++i) {
        while (lo < vals.size() &&
               (strict ? vals[i] - vals[lo] >= delta : vals[i] - vals[lo] > delta))
            ++lo;
        while (hi < vals.size() &&
               (strict ? vals[hi] - vals[i] < delta : vals[hi] - vals[i] <= delta))
            ++hi;
        if (hi > lo) count += hi - lo;  // empty at delta = 0 under strict <
    }
    const double eps = 0.05;
    LatticeCount out;
    out.count = count;
    out.bound = std::pow(static_cast<double>(J) * D, eps) *
                (static_cast<double>(J) * D * L +
                 delta * std::pow(static_cast<double>(D), 3.0) * J *
                     std::pow(static_cast<double>(L), 2.0 - 1.0 / gamma));
    return out;
}

TrilinearSum trilinear_sum_check(int H, int N, int M, double Xamp, double alpha,
                                 double beta, double gamma_e) {
    if (H > 256 || N > 256 || M > 256)
        throw resource_error("trilinear_sum_check: parameters capped at 256");
    if (H < 2 || N < 2 || M < 2)
        throw std::domain_error("trilinear_sum_check: parameters must be >= 2");
    if (alpha == 0.0 || alpha == 1.0)
        throw std::domain_error("trilinear_sum_check: alpha(alpha-1) must be nonzero");
    if (beta == 0.0)
        throw std::domain_error("trilinear_sum_check: beta must be nonzero");
    if (gamma_e == 0.0)
        throw std::domain_error("trilinear_sum_check: gamma must be nonzero");
    if (!(Xamp > 0.0))
        throw std::domain_error("trilinear_sum_check: X must be positive");
    double S = 0.0;
    for (int h = H / 2 + 1; h <= H; ++h) {
        const double hb = std::pow(static_cast<double>(h) / H, beta);
        for (int n = N / 2 + 1; n <= N; ++n) {
            const double ng = std::pow(static_cast<double>(n) / N, gamma_e);
            long double re = 0.0L, im = 0.0L;
            for (int m = M / 2 + 1; m <= M; ++m) {
                double phase = Xamp * std::pow(static_cast<double>(m) / M, alpha) * hb * ng;
                double ang = 2.0 * M_PI * (phase - std::floor(phase));
                re += std::cos(ang);
                im += std::sin(ang);
            }
            S += std::sqrt(static_cast<double>(re * re + im * im));
        }
    }
    const double eps = 0.05;
    const double hnm = static_cast<double>(H) * N * M;
    TrilinearSum out;
    out.S = S;
    out.bound = std::pow(hnm, 1.0 + eps) *
                (std::pow(Xamp / (static_cast<double>(H) * N * M * M), 0.25) +
                 1.0 / std::sqrt(static_cast<double>(M)) + 1.0 / Xamp);
    return out;
}

}  // namespace pslab::expsums
