#include "pslab/ps_counts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pslab/errors.hpp"

namespace pslab::pscounts {

namespace {

constexpr uint64_t kMinX = 1000;
constexpr uint64_t kMaxXInstance = 1'000'000'000;  // desk-scale counting ceiling
constexpr uint64_t kSieveCapSpan =
    arith::FactorSieve::kSegmentLen * arith::FactorSieve::kMaxSegments;

long double psi_saw(long double t) { return t - floorl(t) - 0.5L; }

// smallest integer q with q >= x^{1/17.41}
uint64_t z_min_integer(uint64_t x) {
    const double e = 1.0 / params::kSieveCutoffDen;
    long double approx = expl(logl(static_cast<long double>(x)) * e);
    uint64_t q = static_cast<uint64_t>(approx);
    if (q < 2) q = 2;
    // want smallest q with 17.41 * log q >= log x
    while (cmp_pow_log(params::kSieveCutoffDen, q, x) < 0) ++q;
    while (q > 2 && cmp_pow_log(params::kSieveCutoffDen, q - 1, x) >= 0) --q;
    return q;
}

// largest integer q with q < x^{1/u}  (u * log q < log x)
uint64_t u_cut_integer(uint64_t x, double u) {
    long double approx = expl(logl(static_cast<long double>(x)) / static_cast<long double>(u));
    uint64_t q = static_cast<uint64_t>(approx) + 2;
    while (q > 1 && cmp_pow_log(u, q, x) >= 0) --q;
    return q;
}

}  // namespace

PsInstance make_instance(uint64_t x, double gamma, double eta, double epsilon) {
    if (x < kMinX) throw std::domain_error("make_instance: x must be >= 1000");
    if (x > kMaxXInstance)
        throw resource_error("make_instance: x above desk-scale ceiling " +
                             std::to_string(kMaxXInstance));
    if (!(gamma > 0.5 && gamma < 1.0))
        throw std::domain_error("make_instance: gamma must lie in (1/2, 1)");
    PsInstance inst;
    inst.x = x;
    inst.gamma = gamma;
    inst.prm = params::make_params(gamma, eta, epsilon);
    inst.p_max = floor_pow(x, gamma);
    inst.z_prime_min = z_min_integer(x);
    inst.u_cut = u_cut_integer(x, inst.prm.u);
    inst.d_max = floor_pow(x, inst.prm.xi);
    if (x - 2 + 1 <= kSieveCapSpan)
        inst.table = std::make_shared<const arith::FactorSieve>(2, x);
    return inst;
}

void for_each_prime_a(const PsInstance& inst,
                      const std::function<void(uint64_t, uint64_t)>& fn) {
    arith::segmented_scan(2, inst.p_max, arith::FactorSieve::kSegmentLen,
                          [&](const arith::FactorSieve& seg) {
                              seg.for_each_prime([&](uint64_t p) {
                                  fn(p, floor_root_pow(p, inst.gamma));
                              });
                          });
}

std::vector<RemainderRecord> count_A_all(const PsInstance& inst, uint64_t d_max) {
    if (d_max < 1) throw std::domain_error("count_A_all: d_max must be >= 1");
    std::vector<uint64_t> direct(d_max + 1, 0), floordiff(d_max + 1, 0);
    uint64_t primes = 0;
    for_each_prime_a(inst, [&](uint64_t, uint64_t a) {
        ++primes;
        for (uint64_t d = 1; d <= d_max; ++d) {
            if (a % d == 0) ++direct[d];
            // [p^{1/g}/d] - [(p^{1/g}-1)/d] over the verified floor a:
            // equals a/d - (a-1)/d in integer arithmetic
            floordiff[d] += a / d - (a - 1) / d;
        }
    });
    std::vector<RemainderRecord> out;
    for (uint64_t d = 1; d <= d_max; ++d) {
        if (direct[d] != floordiff[d])
            throw precision_error("count_A_d: membership and floor-difference paths disagree at d=" +
                                  std::to_string(d));
        RemainderRecord rec;
        rec.d = d;
        rec.card = direct[d];
        rec.main_term = static_cast<double>(primes) / static_cast<double>(d);
        rec.r_d = static_cast<double>(rec.card) - rec.main_term;
        out.push_back(rec);
    }
    return out;
}

RemainderRecord count_A_d(const PsInstance& inst, uint64_t d) {
    if (d < 1) throw std::domain_error("count_A_d: d must be >= 1");
    uint64_t direct = 0, floordiff = 0, primes = 0;
    for_each_prime_a(inst, [&](uint64_t, uint64_t a) {
        ++primes;
        if (a % d == 0) ++direct;
        floordiff += a / d - (a - 1) / d;
    });
    if (direct != floordiff)
        throw precision_error("count_A_d: membership and floor-difference paths disagree");
    RemainderRecord rec;
    rec.d = d;
    rec.card = direct;
    rec.main_term = static_cast<double>(primes) / static_cast<double>(d);
    rec.r_d = static_cast<double>(rec.card) - rec.main_term;
    return rec;
}

namespace {

// Ascending-argument Omega/mu/spf reader backed either by the instance's
// full table or by a sliding segmented window.
class FactorReader {
public:
    explicit FactorReader(const PsInstance& inst) : inst_(inst) {}

    const arith::FactorSieve& at(uint64_t a) {
        if (inst_.table) return *inst_.table;
        if (!win_ || a < win_->lo() || a > win_->hi()) {
            const uint64_t lo = std::max<uint64_t>(2, a);
            win_.emplace(lo, lo + arith::FactorSieve::kSegmentLen - 1);
        }
        return *win_;
    }

private:
    const PsInstance& inst_;
    std::optional<arith::FactorSieve> win_;
};

}  // namespace

P7Count count_P7(const PsInstance& inst, int omega_max, bool sifted) {
    P7Count out{};
    FactorReader reader(inst);
    uint64_t prev_a = 0;  // equal a values are adjacent in the ascending stream
    for_each_prime_a(inst, [&](uint64_t, uint64_t a) {
        ++out.considered;
        const bool new_a = (a != prev_a);
        if (new_a) ++out.distinct_a;
        const auto& t = reader.at(a);
        bool ok = t.omega_total(a) <= omega_max;
        if (ok && sifted) ok = t.spf(a) >= inst.z_prime_min;
        if (ok) {
            ++out.count;
            if (new_a) ++out.distinct_count;
        }
        prev_a = a;
    });
    const double lx = std::log(static_cast<double>(inst.x));
    out.benchmark = std::pow(static_cast<double>(inst.x), inst.gamma) / (lx * lx);
    return out;
}

WeightedW weighted_W(const PsInstance& inst) {
    WeightedW out{};
    // primes < z (the sifting set) and primes in [z, x^{1/u}) (the weight window)
    const auto small = arith::primes_upto(std::max<uint64_t>(2, inst.u_cut));
    std::vector<uint64_t> sift_primes, weight_primes;
    for (uint64_t q : small) {
        if (q < inst.z_prime_min)
            sift_primes.push_back(q);
        else if (q <= inst.u_cut)
            weight_primes.push_back(q);
    }
    const double lam = inst.prm.lambda_w;
    const double u = inst.prm.u;
    const double lx = std::log(static_cast<double>(inst.x));
    FactorReader reader(inst);
    for_each_prime_a(inst, [&](uint64_t, uint64_t a) {
        for (uint64_t q : sift_primes)
            if (a % q == 0) return;
        ++out.survivors;
        double penalty = 0.0;
        for (uint64_t q : weight_primes) {
            if (a % q == 0)
                penalty += 1.0 - u * std::log(static_cast<double>(q)) / lx;
        }
        const double w = 1.0 - lam * penalty;
        out.W += w;
        const auto& t = reader.at(a);
        const int om = t.omega_total(a);
        const bool sqfree = t.squarefree(a);
        if (om <= 7)
            out.w_omega_le7 += w;
        else if (om == 8 && sqfree)
            out.w_omega8_sqfree += w;
        else if (om >= 9 && sqfree)
            out.w_omega_ge9_sqfree += w;
        else
            out.w_nonsquarefree_ge8 += w;
        if (sqfree && !(w < lam * (9.0 - om)))
            ++out.weight_upper_violations;
    });
    return out;
}

std::vector<uint64_t> enumerate_B(uint64_t x) {
    std::vector<uint64_t> out;
    if (x < 2) return out;
    const uint64_t q0 = z_min_integer(x);
    // the seven smallest admissible primes bound the largest possible p8
    auto seed = arith::primes_upto(1000);
    std::vector<uint64_t> first7;
    for (uint64_t p : seed)
        if (p >= q0) {
            first7.push_back(p);
            if (first7.size() == 7) break;
        }
    if (first7.size() < 7) return out;
    unsigned __int128 base = 1;
    for (uint64_t p : first7) base *= p;
    if (base > x) return out;
    const uint64_t p8_bound = static_cast<uint64_t>(x / static_cast<uint64_t>(base));
    if (p8_bound > 100'000'000)
        throw resource_error("enumerate_B: prime bound too large for enumeration");
    const auto primes = arith::primes_upto(p8_bound);
    size_t start = 0;
    while (start < primes.size() && primes[start] < q0) ++start;

    std::vector<uint64_t> chosen;
    std::function<void(size_t, uint64_t)> dfs = [&](size_t idx, uint64_t prod) {
        const int depth = static_cast<int>(chosen.size());
        if (depth == 8) {
            out.push_back(prod);
            return;
        }
        const int rem = 8 - depth;
        for (size_t i = idx; i < primes.size(); ++i) {
            const uint64_t p = primes[i];
            // prune: p^rem * prod <= x required since later primes only grow
            unsigned __int128 need = prod;
            bool fits = true;
            for (int r = 0; r < rem; ++r) {
                need *= p;
                if (need > x) {
                    fits = false;
                    break;
                }
            }
            if (!fits) break;
            chosen.push_back(p);
            dfs(i + 1, prod * p);
            chosen.pop_back();
        }
    };
    dfs(start, 1);
    std::sort(out.begin(), out.end());
    return out;
}

CurlyX curly_X(const PsInstance& inst) {
    CurlyX out{};
    const auto B = enumerate_B(inst.x);
    out.members = B.size();
    long double sum = 0.0L, lead = 0.0L;
    const long double g = inst.gamma;
    for (uint64_t l : B) {
        const long double lg = powl(static_cast<long double>(l), g);
        const long double lg1 = powl(static_cast<long double>(l) + 1.0L, g);
        sum += lg1 - lg;
        lead += g * powl(static_cast<long double>(l), g - 1.0L);
    }
    out.value = static_cast<double>(sum);
    out.leading = static_cast<double>(lead);
    return out;
}

RfrakResult remainder_R_frak(const PsInstance& inst, uint64_t d) {
    if (d < 1) throw std::domain_error("remainder_R_frak: d must be >= 1");
    const auto B = enumerate_B(inst.x);
    const long double g = inst.gamma;
    long double r = 0.0L, X = 0.0L;
    uint64_t card = 0;
    for (uint64_t l : B) {
        const long double lg = powl(static_cast<long double>(l), g);
        const long double lg1 = powl(static_cast<long double>(l) + 1.0L, g);
        X += lg1 - lg;
        r += psi_saw(-lg1 / d) - psi_saw(-lg / d);
        // direct membership: n in [l^gamma, (l+1)^gamma) with d | n
        const uint64_t a = ceil_pow(l, inst.gamma);
        const uint64_t b = ceil_pow(l + 1, inst.gamma) - 1;  // inclusive
        if (b >= a) card += b / d - (a - 1) / d;
    }
    RfrakResult out;
    out.d = d;
    out.r_d = static_cast<double>(r);
    out.x_over_d = static_cast<double>(X / d);
    out.card_E_d = card;
    const double recon = out.x_over_d + out.r_d;
    if (std::fabs(recon - static_cast<double>(card)) > 1e-6)
        throw precision_error("remainder_R_frak: #E_d disagrees with X/d + R_d");
    return out;
}

}  // namespace pslab::pscounts
