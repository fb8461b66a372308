#include "pslab/factor_sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pslab/errors.hpp"

namespace pslab::arith {

std::vector<uint64_t> primes_upto(uint64_t n) {
    std::vector<uint64_t> out;
    if (n < 2) return out;
    std::vector<char> mark(n + 1, 1);
    mark[0] = mark[1] = 0;
    for (uint64_t i = 2; i * i <= n; ++i)
        if (mark[i])
            for (uint64_t j = i * i; j <= n; j += i) mark[j] = 0;
    for (uint64_t i = 2; i <= n; ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

static uint64_t isqrt64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

size_t FactorSieve::idx(uint64_t n) const {
    if (n < lo_ || n > hi_) throw std::domain_error("FactorSieve: n outside [lo, hi]");
    return static_cast<size_t>(n - lo_);
}

FactorSieve::FactorSieve(uint64_t lo, uint64_t hi) : lo_(lo), hi_(hi) {
    if (lo < 2) throw std::domain_error("FactorSieve: lo must be >= 2");
    if (hi <= lo) throw std::domain_error("FactorSieve: hi must exceed lo");
    if (hi >= (uint64_t(1) << 32))
        throw resource_error("FactorSieve: hi must be below 2^32");
    const uint64_t span = hi - lo + 1;
    if (span > kSegmentLen * kMaxSegments)
        throw resource_error("FactorSieve: span " + std::to_string(span) +
                             " exceeds limit " + std::to_string(kSegmentLen * kMaxSegments));

    spf_.assign(span, 0);
    big_.assign(span, 0);
    dist_.assign(span, 0);

    const auto base = primes_upto(isqrt64(hi));
    std::vector<uint64_t> cof(std::min<uint64_t>(span, kSegmentLen));

    for (uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegmentLen) {
        const uint64_t seg_hi = std::min(hi, seg_lo + kSegmentLen - 1);
        const uint64_t len = seg_hi - seg_lo + 1;
        for (uint64_t i = 0; i < len; ++i) cof[i] = seg_lo + i;
        for (uint64_t p : base) {
            if (p * p > seg_hi) break;
            uint64_t start = ((seg_lo + p - 1) / p) * p;
            for (uint64_t m = start; m <= seg_hi; m += p) {
                const size_t k = static_cast<size_t>(m - lo_);
                const size_t c = static_cast<size_t>(m - seg_lo);
                if (spf_[k] == 0) spf_[k] = static_cast<uint32_t>(p);
                uint8_t e = 0;
                while (cof[c] % p == 0) {
                    cof[c] /= p;
                    ++e;
                }
                big_[k] += e;
                dist_[k] += 1;
            }
        }
        for (uint64_t i = 0; i < len; ++i) {
            const size_t k = static_cast<size_t>(seg_lo + i - lo_);
            if (cof[i] > 1) {  // leftover prime factor > sqrt(hi)
                big_[k] += 1;
                dist_[k] += 1;
                if (spf_[k] == 0) spf_[k] = static_cast<uint32_t>(cof[i]);
            }
        }
    }
}

double FactorSieve::lambda(uint64_t n) const {
    if (n == 0) throw std::domain_error("lambda: n must be >= 1");
    if (n == 1) return 0.0;
    const size_t i = idx(n);
    if (dist_[i] != 1) return 0.0;
    return std::log(static_cast<double>(spf_[i]));
}

void FactorSieve::for_each_prime(const std::function<void(uint64_t)>& f) const {
    for (uint64_t n = lo_; n <= hi_; ++n)
        if (spf_[static_cast<size_t>(n - lo_)] == n) f(n);
}

std::vector<uint64_t> FactorSieve::primes() const {
    std::vector<uint64_t> out;
    for_each_prime([&](uint64_t p) { out.push_back(p); });
    return out;
}

void segmented_scan(uint64_t lo, uint64_t hi, uint64_t seg_len,
                    const std::function<void(const FactorSieve&)>& fn) {
    if (seg_len < 2) throw std::domain_error("segmented_scan: seg_len must be >= 2");
    if (hi <= lo) throw std::domain_error("segmented_scan: hi must exceed lo");
    uint64_t s = lo;
    while (s <= hi) {
        uint64_t e = (hi - s < seg_len) ? hi : s + seg_len - 1;
        if (e < hi && hi - e == 1) e = hi;  // absorb a would-be singleton tail
        fn(FactorSieve(s, e));
        if (e == hi) break;
        s = e + 1;
    }
}

}  // namespace pslab::arith
