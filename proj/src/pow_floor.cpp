#include "pslab/pow_floor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pslab/errors.hpp"

#if defined(PSLAB_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace pslab::pscounts {

namespace {

// sign of a*log(m) - b*log(q) with certified error margins; 0 means
// "could not separate from zero at the highest precision".
int sign_log_comb(double a, uint64_t m, double b, uint64_t q) {
    const long double t = static_cast<long double>(a) * std::log(static_cast<long double>(m)) -
                          static_cast<long double>(b) * std::log(static_cast<long double>(q));
    const long double slop1 = 1e-16L;  // generous vs ~1e-18 actual roundoff
    if (t > slop1) return 1;
    if (t < -slop1) return -1;
#if defined(PSLAB_HAVE_QUADMATH)
    const __float128 tq = static_cast<__float128>(a) * logq(static_cast<__float128>(m)) -
                          static_cast<__float128>(b) * logq(static_cast<__float128>(q));
    const __float128 slop2 = 1e-30Q;
    if (tq > slop2) return 1;
    if (tq < -slop2) return -1;
#endif
    return 0;
}

// is k^gamma <= p, i.e. gamma log k - log p <= 0?  tri-state.
int cmp_kpow_p(uint64_t k, double gamma, uint64_t p) {
    if (k <= 1) return -1;  // 1 <= p always here
    return sign_log_comb(gamma, k, 1.0, p);
}

uint64_t checked_int_pow(uint64_t p, int r) {
    uint64_t acc = 1;
    for (int i = 0; i < r; ++i) {
        if (acc > UINT64_MAX / p) throw resource_error("floor_root_pow: p^(1/gamma) overflows");
        acc *= p;
    }
    return acc;
}

}  // namespace

uint64_t floor_root_pow(uint64_t p, double gamma) {
    if (p < 2) throw std::domain_error("floor_root_pow: p must be >= 2");
    if (!(gamma >= 0.5 && gamma < 1.0))
        throw std::domain_error("floor_root_pow: gamma must lie in [1/2, 1)");
    // Exact integral exponent (gamma = 1/2, 1/3 stored exactly in binary
    // never occurs for 1/3, but 1/2 does): p^{1/gamma} is then an integer.
    const double inv = 1.0 / gamma;
    if (inv == std::floor(inv) && gamma == 1.0 / inv)
        return checked_int_pow(p, static_cast<int>(inv));

    const long double y =
        expl(logl(static_cast<long double>(p)) / static_cast<long double>(gamma));
    uint64_t k = static_cast<uint64_t>(y);
    // verify and adjust: want largest k with k^gamma <= p
    while (true) {
        int c = cmp_kpow_p(k + 1, gamma, p);
        if (c == 0)
            throw precision_error("floor_root_pow: p^(1/gamma) indistinguishable from integer " +
                                  std::to_string(k + 1));
        if (c < 0)
            ++k;
        else
            break;
    }
    while (k >= 2) {
        int c = cmp_kpow_p(k, gamma, p);
        if (c == 0)
            throw precision_error("floor_root_pow: p^(1/gamma) indistinguishable from integer " +
                                  std::to_string(k));
        if (c > 0)
            --k;
        else
            break;
    }
    return k;
}

uint64_t floor_pow(uint64_t n, double gamma) {
    if (n == 0) throw std::domain_error("floor_pow: n must be >= 1");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::domain_error("floor_pow: gamma must lie in (0, 1)");
    if (n == 1) return 1;
    const long double y =
        expl(static_cast<long double>(gamma) * logl(static_cast<long double>(n)));
    uint64_t k = static_cast<uint64_t>(y);
    if (k == 0) k = 1;
    // want largest k with k <= n^gamma  <=>  log k <= gamma log n
    while (true) {
        int c = sign_log_comb(1.0, k + 1, gamma, n);
        if (c == 0)
            throw precision_error("floor_pow: n^gamma indistinguishable from integer " +
                                  std::to_string(k + 1));
        if (c < 0)
            ++k;
        else
            break;
    }
    while (k >= 2) {
        int c = sign_log_comb(1.0, k, gamma, n);
        if (c == 0)
            throw precision_error("floor_pow: n^gamma indistinguishable from integer " +
                                  std::to_string(k));
        if (c > 0)
            --k;
        else
            break;
    }
    return k;
}

uint64_t ceil_pow(uint64_t n, double gamma) {
    if (n == 1) return 1;
    return floor_pow(n, gamma) + 1;  // floor_pow certifies non-integrality
}

int cmp_pow_log(double a, uint64_t m, uint64_t q) {
    int c = sign_log_comb(a, m, 1.0, q);
    if (c == 0)
        throw precision_error("cmp_pow_log: comparison indistinguishable from equality");
    return c;
}

}  // namespace pslab::pscounts
