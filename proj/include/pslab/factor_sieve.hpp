#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace pslab::arith {

// Smallest-prime-factor table for an integer range [lo, hi], built
// segment by segment so no allocation ever exceeds one segment plus the
// per-entry output arrays.  Also records Omega(n), omega(n) and mu(n),
// which cannot be recovered from spf alone once the chain leaves the range.
class FactorSieve {
public:
    static constexpr uint64_t kSegmentLen = uint64_t(1) << 20;   // entries per build segment
    static constexpr uint64_t kMaxSegments = 16;                  // span cap = 2^24 entries

    FactorSieve(uint64_t lo, uint64_t hi);  // inclusive; throws on bad range

    uint64_t lo() const { return lo_; }
    uint64_t hi() const { return hi_; }

    uint64_t spf(uint64_t n) const { return spf_[idx(n)]; }
    bool is_prime(uint64_t n) const { return spf_[idx(n)] == n; }
    int omega_total(uint64_t n) const { return big_[idx(n)]; }      // Omega
    int omega_distinct(uint64_t n) const { return dist_[idx(n)]; }  // omega
    bool squarefree(uint64_t n) const { return big_[idx(n)] == dist_[idx(n)]; }
    int mu(uint64_t n) const {
        size_t i = idx(n);
        if (big_[i] != dist_[i]) return 0;
        return (dist_[i] & 1) ? -1 : 1;
    }
    // von Mangoldt at n: log p if n = p^k, else 0
    double lambda(uint64_t n) const;

    void for_each_prime(const std::function<void(uint64_t)>& f) const;
    std::vector<uint64_t> primes() const;

private:
    size_t idx(uint64_t n) const;
    uint64_t lo_, hi_;
    std::vector<uint32_t> spf_;  // values fit: the build caps hi below 2^32
    std::vector<uint8_t> big_;   // Omega(n)
    std::vector<uint8_t> dist_;  // omega(n)
};

// Streams FactorSieve segments covering [lo, hi] in ascending order.
// Each callback gets a sieve whose span is at most seg_len entries.
void segmented_scan(uint64_t lo, uint64_t hi, uint64_t seg_len,
                    const std::function<void(const FactorSieve&)>& fn);

// Simple prime list up to n inclusive (Eratosthenes).
std::vector<uint64_t> primes_upto(uint64_t n);

}  // namespace pslab::arith
