#include "pslab/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace pslab::arith {

double lambda_of(uint64_t n) {
    if (n == 0) throw std::domain_error("lambda_of: n must be >= 1");
    if (n == 1) return 0.0;
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
        }
    }
    return std::log(static_cast<double>(m));  // n itself prime
}

int mu_of(uint64_t n) {
    if (n == 0) throw std::domain_error("mu_of: n must be >= 1");
    int k = 0;
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            ++k;
        }
    }
    if (m > 1) ++k;
    return (k & 1) ? -1 : 1;
}

int omega_of(uint64_t n) {
    if (n == 0) throw std::domain_error("omega_of: n must be >= 1");
    int k = 0;
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; ++p) {
        while (m % p == 0) {
            m /= p;
            ++k;
        }
    }
    if (m > 1) ++k;
    return k;
}

static uint64_t cbrt_floor(uint64_t X) {
    uint64_t c = static_cast<uint64_t>(std::cbrt(static_cast<double>(X)));
    while (c > 0 && c * c * c > X) --c;
    while ((c + 1) * (c + 1) * (c + 1) <= X) ++c;
    return c;
}

static std::vector<uint64_t> divisors_of(uint64_t n) {
    std::vector<uint64_t> small, large;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (size_t i = large.size(); i-- > 0;) small.push_back(large[i]);
    return small;
}

namespace {

struct HbContext {
    uint64_t cut;
    double total = 0.0;
    std::vector<HbTerm>* terms;
    std::vector<uint64_t> chosen;
};

// Free slots j+1 .. 2j-1 run over ordered divisors; the last slot m_{2j}
// absorbs the remainder and carries the log weight.
void hb_free(HbContext& ctx, uint64_t r, int slots_left, int j, double sign_mu) {
    if (slots_left == 1) {
        double w = sign_mu * std::log(static_cast<double>(r));
        ctx.total += w;
        if (ctx.terms) {
            HbTerm t;
            t.j = j;
            t.factors = ctx.chosen;
            t.factors.push_back(r);
            t.weight = w;
            ctx.terms->push_back(t);
        }
        return;
    }
    for (uint64_t d : divisors_of(r)) {
        ctx.chosen.push_back(d);
        hb_free(ctx, r / d, slots_left - 1, j, sign_mu);
        ctx.chosen.pop_back();
    }
}

// mu-carrying slots 1..j, each capped at X^{1/3}; zero-mu divisors pruned.
void hb_mu(HbContext& ctx, uint64_t r, int depth, int j, double sign_mu) {
    if (depth > j) {
        hb_free(ctx, r, j, j, sign_mu);
        return;
    }
    for (uint64_t d : divisors_of(r)) {
        if (d > ctx.cut) break;  // divisors ascend
        int mu = mu_of(d);
        if (mu == 0) continue;
        ctx.chosen.push_back(d);
        hb_mu(ctx, r / d, depth + 1, j, sign_mu * mu);
        ctx.chosen.pop_back();
    }
}

}  // namespace

double heath_brown_lambda_terms(uint64_t n, uint64_t X, std::vector<HbTerm>* terms) {
    if (X < 8) throw std::domain_error("heath_brown_lambda: X must be >= 8");
    if (!(n > X / 2 && n <= X))
        throw std::domain_error("heath_brown_lambda: n must lie in (X/2, X]");
    HbContext ctx;
    ctx.cut = cbrt_floor(X);
    ctx.terms = terms;
    const int binom3[4] = {0, 3, 3, 1};
    for (int j = 1; j <= 3; ++j) {
        double sign = binom3[j] * ((j % 2 == 1) ? 1.0 : -1.0);
        hb_mu(ctx, n, 1, j, sign);
    }
    return ctx.total;
}

double heath_brown_lambda(uint64_t n, uint64_t X) {
    return heath_brown_lambda_terms(n, X, nullptr);
}

double mertens_product(uint64_t z) {
    if (z < 3) throw std::domain_error("mertens_product: z must be >= 3");
    double prod = 1.0;
    for (uint64_t p : primes_upto(z - 1))
        prod *= 1.0 - 1.0 / static_cast<double>(p);
    return prod;
}

}  // namespace pslab::arith
