#include "pslab/partial_products.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace pslab::partition {

SubsetHit subset_hit(const std::array<double, 8>& t, const WindowConstants& w) {
    SubsetHit out{false, 0u, 0.0, -1e300};
    // masks ordered by popcount, then numerically; proper nonempty subsets only
    for (int pc = 1; pc <= 7; ++pc) {
        for (unsigned mask = 1; mask < 255; ++mask) {
            if (std::popcount(mask) != pc) continue;
            double s = 0.0;
            for (int i = 0; i < 8; ++i)
                if (mask & (1u << i)) s += t[i];
            const double m = std::min(s - w.alpha0, w.beta0 - s);
            if (m > out.margin) out.margin = m;
            if (!out.hit && m >= 0.0) {
                out.hit = true;
                out.mask = mask;
                out.sum = s;
            }
        }
    }
    return out;
}

CertReport exhaustive_certify(double step, double eta_s, const WindowConstants& w,
                              int workers, bool compute_margin) {
    if (!(step >= 1e-3 && step <= 1e-2))
        throw std::domain_error("exhaustive_certify: step must lie in [1e-3, 1e-2]");
    if (!(eta_s > 0.0 && eta_s <= 0.05))
        throw std::domain_error("exhaustive_certify: eta_s must lie in (0, 0.05]");

    const double tmin = 1.0 / params::kSieveCutoffDen;
    const int64_t kmin = static_cast<int64_t>(std::ceil(tmin / step - 1e-12));
    const int64_t sum_hi = static_cast<int64_t>(std::llround(1.0 / step));
    if (std::fabs(sum_hi * step - 1.0) > 1e-12)
        throw std::domain_error("exhaustive_certify: 1/step must be an integer so the grid "
                                "contains the boundary sum = 1");
    const int64_t sum_lo = static_cast<int64_t>(std::ceil((1.0 - eta_s) / step - 1e-12));
    // closed window [alpha0, beta0] in grid units; the endpoints are never
    // exact multiples of the admissible steps
    const int64_t win_lo = static_cast<int64_t>(std::ceil(w.alpha0 / step - 1e-9));
    const int64_t win_hi = static_cast<int64_t>(std::floor(w.beta0 / step + 1e-9));

    CertReport rep;
    rep.step = step;
    rep.eta_s = eta_s;
    rep.points_checked = 0;
    rep.min_margin = compute_margin ? 1e300 : std::numeric_limits<double>::infinity();

    std::vector<int64_t> shards;  // by the first (smallest) coordinate
    for (int64_t k1 = kmin; k1 * 8 <= sum_hi; ++k1) shards.push_back(k1);

    std::mutex mtx;
    size_t next_shard = 0;

    auto worker = [&]() {
        std::array<int64_t, 8> k{};
        std::array<int64_t, 128> sums7;  // subset sums over the first 7 entries
        uint64_t local_points = 0;
        double local_min = 1e300;
        std::vector<std::array<double, 8>> local_bad;

        auto record_bad = [&](int64_t k8) {
            std::array<double, 8> pt;
            for (int i = 0; i < 7; ++i) pt[i] = k[i] * step;
            pt[7] = k8 * step;
            local_bad.push_back(pt);
        };

        std::function<void(int, int64_t)> rec = [&](int depth, int64_t acc) {
            if (depth == 6 && !compute_margin) {
                // a hit among the first six coordinates certifies every
                // completion (k7, k8); count those in closed form
                std::array<int64_t, 64> sums6;
                sums6[0] = 0;
                for (int i = 0; i < 6; ++i) {
                    const int64_t v = k[i];
                    const unsigned bit = 1u << i;
                    for (unsigned m = 0; m < bit; ++m) sums6[bit | m] = sums6[m] + v;
                }
                bool hit6 = false;
                for (unsigned m = 1; m < 64 && !hit6; ++m)
                    hit6 = sums6[m] >= win_lo && sums6[m] <= win_hi;
                if (hit6) {
                    for (int64_t k7 = k[5]; acc + 2 * k7 <= sum_hi; ++k7) {
                        const int64_t lo8 = std::max(k7, sum_lo - acc - k7);
                        const int64_t hi8 = sum_hi - acc - k7;
                        if (lo8 <= hi8) local_points += static_cast<uint64_t>(hi8 - lo8 + 1);
                    }
                    return;
                }
            }
            if (depth == 7) {  // the last coordinate runs over a contiguous range
                const int64_t lo = std::max(k[6], sum_lo - acc);
                const int64_t hi = sum_hi - acc;
                if (lo > hi) return;
                sums7[0] = 0;
                for (int i = 0; i < 7; ++i) {
                    const int64_t v = k[i];
                    const unsigned bit = 1u << i;
                    for (unsigned m = 0; m < bit; ++m) sums7[bit | m] = sums7[m] + v;
                }
                local_points += static_cast<uint64_t>(hi - lo + 1);

                if (compute_margin) {
                    for (int64_t k8 = lo; k8 <= hi; ++k8) {
                        double margin = -1e300;
                        for (unsigned m = 1; m < 255; ++m) {
                            const int64_t s = sums7[m & 127] + ((m & 128) ? k8 : 0);
                            const double sv = s * step;
                            const double mm = std::min(sv - w.alpha0, w.beta0 - sv);
                            if (mm > margin) margin = mm;
                        }
                        if (margin < 0.0) record_bad(k8);
                        if (margin < local_min) local_min = margin;
                    }
                    return;
                }

                // certification-only: a hit among the first seven coordinates
                // certifies every k8 in the range at once
                bool hit7 = false;
                for (unsigned m = 1; m < 128 && !hit7; ++m)
                    hit7 = sums7[m] >= win_lo && sums7[m] <= win_hi;
                if (hit7) return;
                // otherwise each k8 needs some proper subset containing it:
                // sums7[m] + k8 in [win_lo, win_hi] for m in [0, 126]
                std::array<int64_t, 127> srt;
                std::copy(sums7.begin(), sums7.begin() + 127, srt.begin());
                std::sort(srt.begin(), srt.end());
                for (int64_t k8 = lo; k8 <= hi; ++k8) {
                    auto it = std::lower_bound(srt.begin(), srt.end(), win_lo - k8);
                    if (it == srt.end() || *it > win_hi - k8) record_bad(k8);
                }
                return;
            }
            const int rem = 8 - depth;
            for (int64_t kk = k[depth - 1];; ++kk) {
                if (acc + kk * rem > sum_hi) break;  // nondecreasing tail overshoots
                k[depth] = kk;
                rec(depth + 1, acc + kk);
            }
        };

        while (true) {
            int64_t k1;
            {
                std::lock_guard<std::mutex> lk(mtx);
                if (next_shard >= shards.size()) break;
                k1 = shards[next_shard++];
            }
            k[0] = k1;
            rec(1, k1);
        }
        {
            std::lock_guard<std::mutex> lk(mtx);
            rep.points_checked += local_points;
            rep.min_margin = std::min(rep.min_margin, local_min);
            for (auto& b : local_bad) rep.counterexamples.push_back(b);
        }
    };

    std::vector<std::thread> pool;
    for (int i = 0; i < std::max(1, workers); ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    if (!compute_margin) rep.min_margin = std::numeric_limits<double>::infinity();
    std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
    return rep;
}

WindowSlack window_inside_analytic(const params::GammaParams& p, const WindowConstants& w) {
    if (!(p.gamma >= 0.989 && p.gamma < 1.0))
        throw std::domain_error("window_inside_analytic: gamma must lie in [0.989, 1)");
    WindowSlack out;
    out.left_slack = w.alpha0 - (5.0 - 5.0 * p.gamma + 4.0 * p.xi + p.eta);
    out.right_slack = (p.gamma + p.xi + 2.0) / 4.0 - p.eta - w.beta0;
    out.pass = out.left_slack >= 0.0 && out.right_slack >= 0.0;
    return out;
}

}  // namespace pslab::partition
