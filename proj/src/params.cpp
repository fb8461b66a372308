#include "pslab/params.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "pslab/errors.hpp"
#include "pslab/quadrature.hpp"

namespace pslab::params {

GammaParams make_params(double gamma, double eta, double epsilon) {
    if (!(gamma > 99.0 / 140.0) || !(gamma < 1.0))
        throw parameter_error("make_params: gamma must lie in (99/140, 1)");
    if (!(eta > 0.0) || eta > 1e-3)
        throw parameter_error("make_params: eta must lie in (0, 1e-3]");
    if (!(epsilon > 0.0) || epsilon > 1e-3)
        throw parameter_error("make_params: epsilon must lie in (0, 1e-3]");
    GammaParams p;
    p.gamma = gamma;
    p.eta = eta;
    p.epsilon = epsilon;
    p.xi = (140.0 * gamma - 99.0) / 270.0 - eta;
    if (!(p.xi > 0.0))
        throw parameter_error("make_params: xi must be positive");
    if (!(p.xi <= gamma * (1.0 - eta) / 2.0))
        throw parameter_error("make_params: xi exceeds gamma(1-eta)/2");
    p.u = 1.0 / p.xi + epsilon;
    double den = 9.0 - p.u - epsilon;
    if (!(den > 0.0))
        throw parameter_error("make_params: weight denominator nonpositive");
    p.lambda_w = 1.0 / den;
    p.z_exp = 1.0 / kSieveCutoffDen;
    return p;
}

BalogFriedlanderWindow bf_window(const GammaParams& p) {
    BalogFriedlanderWindow w;
    w.a_frak = 2.0 - (3.0 * p.xi + 1.0) / p.gamma - p.eta;
    w.b_frak = (11.0 + 60.0 * p.xi - 11.0 * p.gamma) / (14.0 * p.gamma) + p.eta;
    w.c_frak = (11.0 + 60.0 * p.xi + 30.0 * p.gamma) / (55.0 * p.gamma) - p.eta;
    return w;
}

ConstraintReport check_admissible(const GammaParams& p) {
    ConstraintReport rep;
    auto add = [&](const std::string& name, double slack) {
        rep.items.push_back({name, slack, slack > 0.0});
    };
    const double g = p.gamma, xi = p.xi, eta = p.eta;
    add("gamma > 1/2 + 3xi/2", g - 0.5 - 1.5 * xi);
    add("gamma > 1/2 + xi", g - 0.5 - xi);
    add("gamma > 2xi", g - 2.0 * xi);
    add("gamma > 11/25 + 12xi/5 + eta", g - 11.0 / 25.0 - 12.0 * xi / 5.0 - eta);
    add("gamma > (5xi+6)/7", g - (5.0 * xi + 6.0) / 7.0);
    add("gamma > 225/238", g - 225.0 / 238.0);
    add("17.41xi > 2", kSieveCutoffDen * xi - 2.0);
    add("17.41xi < 4", 4.0 - kSieveCutoffDen * xi);
    const BalogFriedlanderWindow w = bf_window(p);
    add("b < 2/3", 2.0 / 3.0 - w.b_frak);
    add("1 - c < c - b", (w.c_frak - w.b_frak) - (1.0 - w.c_frak));
    add("1 - a < c/2", w.c_frak / 2.0 - (1.0 - w.a_frak));
    rep.all_pass = true;
    for (const auto& c : rep.items) rep.all_pass = rep.all_pass && c.pass;
    // eta -> 0 degeneracy of the last constraint: with xi0 = (140g-99)/270
    // both sides reduce to (150g - 27)/(270g).
    const double xi0 = (140.0 * g - 99.0) / 270.0;
    const double lhs0 = (3.0 * xi0 + 1.0) / g - 1.0;  // 1 - a at eta = 0
    const double rhs0 = (11.0 + 60.0 * xi0 + 30.0 * g) / (110.0 * g);
    rep.balog_degenerate_gap = std::fabs(lhs0 - rhs0);
    return rep;
}

namespace {

BudgetReport finish_budget(BudgetReport rep, const std::vector<BudgetTerm>& terms) {
    rep.window_nonempty = rep.mu_lo < rep.mu_hi;
    rep.min_delta = 1e300;
    for (const auto& t : terms) {
        BudgetTermResult r;
        r.term = t;
        // affine in mu: extremum at an endpoint
        double at_lo = t.value_at(rep.mu_lo);
        double at_hi = t.value_at(rep.mu_hi);
        if (at_lo >= at_hi) {
            r.max_value = at_lo;
            r.mu_at_max = rep.mu_lo;
        } else {
            r.max_value = at_hi;
            r.mu_at_max = rep.mu_hi;
        }
        r.delta = rep.target - r.max_value;
        rep.min_delta = std::min(rep.min_delta, r.delta);
        rep.terms.push_back(r);
    }
    rep.pass = rep.window_nonempty && rep.min_delta > 0.0 && rep.t_exponent_slack > 0.0;
    return rep;
}

}  // namespace

BudgetReport exponent_budget_typeII(const GammaParams& p) {
    const double g = p.gamma, xi = p.xi;
    const double r = xi / g;  // J and D run up to X^{xi/gamma (+eta)}
    BudgetReport rep;
    rep.name = "typeII";
    rep.target = 2.0;
    rep.mu_lo = (11.0 + 60.0 * xi - 11.0 * g) / (14.0 * g) + p.eta;
    rep.mu_hi = (11.0 + 60.0 * xi + 30.0 * g) / (55.0 * g) - p.eta;
    std::vector<BudgetTerm> terms = {
        {"M^-55/41 J D^101/41",
         (112.0 * g - 30.0) / (41.0 * g) + r * (1.0 + 101.0 / 41.0), -55.0 / 41.0},
        {"M^-14/41 J D^19/41",
         (71.0 * g + 11.0) / (41.0 * g) + r * (1.0 + 19.0 / 41.0), -14.0 / 41.0},
        {"M^-14/41 J^71/30 D^-1111/1230",
         (71.0 * g + 11.0) / (41.0 * g) + r * (71.0 / 30.0 - 1111.0 / 1230.0), -14.0 / 41.0},
        {"M^-28/41 J^41/30 D^-541/1230",
         (60.0 * g + 22.0) / (41.0 * g) + r * (41.0 / 30.0 - 541.0 / 1230.0), -28.0 / 41.0},
    };
    // T = [X^{(30g+11)/(41g)} M^{-55/41} D^{60/41}] must stay > 1 up to the
    // top of the window, at the least favourable D = X^{xi/g}.
    rep.t_exponent_slack =
        (30.0 * g + 11.0) / (41.0 * g) + (60.0 / 41.0) * r - (55.0 / 41.0) * rep.mu_hi;
    return finish_budget(std::move(rep), terms);
}

BudgetReport exponent_budget_typeI(const GammaParams& p) {
    const double g = p.gamma, xi = p.xi;
    BudgetReport rep;
    rep.name = "typeI";
    rep.target = 1.0;
    rep.mu_lo = 0.0;
    rep.mu_hi = 2.0 - (3.0 * xi + 1.0) / g - p.eta;
    std::vector<BudgetTerm> terms = {
        {"X^(3xi+1)/(4g)+1/2 M^1/4", (3.0 * xi + 1.0) / (4.0 * g) + 0.5, 0.25},
    };
    // No T parameter here; record instead the observation that
    // (1-xi)/g always exceeds 2 - (3xi+1)/g, so the L^{-1/2} branch never binds.
    rep.t_exponent_slack = (1.0 - xi) / g - (2.0 - (3.0 * xi + 1.0) / g);
    return finish_budget(std::move(rep), terms);
}

BudgetReport exponent_budget_S0(const GammaParams& p) {
    const double g = p.gamma, xi = p.xi;
    BudgetReport rep;
    rep.name = "S0";
    rep.target = 2.0;
    rep.mu_lo = 5.0 - 5.0 * g + 4.0 * xi + p.eta;
    rep.mu_hi = (g + xi + 2.0) / 4.0 - p.eta;
    std::vector<BudgetTerm> terms = {
        {"M^-4/3 X^(14-8g+10xi)/3", (14.0 - 8.0 * g + 10.0 * xi) / 3.0, -4.0 / 3.0},
        {"M^-1/3 X^(11-5g+4xi)/3", (11.0 - 5.0 * g + 4.0 * xi) / 3.0, -1.0 / 3.0},
        {"M^-2/3 X^(10-4g+2xi)/3", (10.0 - 4.0 * g + 2.0 * xi) / 3.0, -2.0 / 3.0},
    };
    // T = [X^{(g+2)/3} M^{-4/3} J D^{1/3}] with J >= 1 and D >= X^xi.
    rep.t_exponent_slack = (g + 2.0) / 3.0 + xi / 3.0 - (4.0 / 3.0) * rep.mu_hi;
    return finish_budget(std::move(rep), terms);
}

Integral1d integral_1d(const GammaParams& p) {
    const double xi = p.xi, u = p.u;
    const double K = kSieveCutoffDen;
    if (u >= K) return {0.0, 0.0};
    if (!(u * xi > 1.0))
        throw std::domain_error("integral_1d: u*xi <= 1, pole inside the range");
    Integral1d out;
    out.closed_form = u * std::log(K / u) +
                      ((1.0 - u * xi) / xi) * std::log((K * xi - 1.0) / (u * xi - 1.0));
    // Integrate in s = t - u so the numerator is exact at the nodes; the
    // pole offset u*xi - 1 (of order xi*epsilon) is formed with one rounding.
    const double c0 = std::fma(u, xi, -1.0);
    auto f = [&](double s) { return s / ((s + u) * (xi * s + c0)); };
    out.quadrature = quad::integrate_gk(f, 0.0, K - u, 1e-13, 64);
    return out;
}

// ---------------------------------------------------------------------------
// 7-fold integral: region t1 in [1/17.41, 1/8], t_{k+1} in [t_k, (1-S_k)/(8-k)],
// integrand prod dt_j/t_j * 1/(t7 (1 - S7)).  The t7 integral has the exact
// value (1/c) log((c - t6)/t6) with c = 1 - S6, leaving six dimensions.
// ---------------------------------------------------------------------------

namespace {

double inner_t6_c(double S6, double t6) {
    const double c = 1.0 - S6;
    return std::log((c - t6) / t6) / c;
}

// One nested tensor pass at n nodes per dimension.
double i7_tensor_pass(int n) {
    const auto& rule = quad::gauss_legendre(n);
    const double lo1 = 1.0 / kSieveCutoffDen, hi1 = 0.125;

    struct Level {
        double t, w, S;
    };

    double total = 0.0;
    auto map_node = [&](double lo, double hi, int k, double& t, double& w) {
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        t = mid + half * rule.nodes[k];
        w = half * rule.weights[k];
    };

    for (int k1 = 0; k1 < n; ++k1) {
        double t1, w1;
        map_node(lo1, hi1, k1, t1, w1);
        const double S1 = t1;
        const double hi2 = (1.0 - S1) / 7.0;
        if (hi2 <= t1) continue;
        for (int k2 = 0; k2 < n; ++k2) {
            double t2, w2;
            map_node(t1, hi2, k2, t2, w2);
            const double S2 = S1 + t2;
            const double hi3 = (1.0 - S2) / 6.0;
            if (hi3 <= t2) continue;
            for (int k3 = 0; k3 < n; ++k3) {
                double t3, w3;
                map_node(t2, hi3, k3, t3, w3);
                const double S3 = S2 + t3;
                const double hi4 = (1.0 - S3) / 5.0;
                if (hi4 <= t3) continue;
                for (int k4 = 0; k4 < n; ++k4) {
                    double t4, w4;
                    map_node(t3, hi4, k4, t4, w4);
                    const double S4 = S3 + t4;
                    const double hi5 = (1.0 - S4) / 4.0;
                    if (hi5 <= t4) continue;
                    double acc4 = 0.0;
                    for (int k5 = 0; k5 < n; ++k5) {
                        double t5, w5;
                        map_node(t4, hi5, k5, t5, w5);
                        const double S5 = S4 + t5;
                        const double hi6 = (1.0 - S5) / 3.0;
                        if (hi6 <= t5) continue;
                        double acc5 = 0.0;
                        for (int k6 = 0; k6 < n; ++k6) {
                            double t6, w6;
                            map_node(t5, hi6, k6, t6, w6);
                            acc5 += w6 / t6 * inner_t6_c(S5 + t6, t6);
                        }
                        acc4 += w5 / t5 * acc5;
                    }
                    total += (w1 / t1) * (w2 / t2) * (w3 / t3) * (w4 / t4) * acc4;
                }
            }
        }
    }
    return total;
}

}  // namespace

I7Result integral_7fold(const GammaParams& p, I7Method method, const I7Options& opts) {
    (void)p;  // the region and integrand involve only 17.41 and the simplex
    I7Result res;
    res.seed = opts.seed;
    if (method == I7Method::tensor_gauss) {
        res.samples = 0;
        double prev = i7_tensor_pass(8);
        int n = 16;
        for (;; n *= 2) {
            double cur = i7_tensor_pass(n);
            double delta = std::fabs(cur - prev);
            if (delta < opts.tensor_tol) {
                res.value = cur;
                res.error_estimate = delta;
                res.nodes = n;
                return res;
            }
            prev = cur;
            if (n >= 32) {
                if (delta > opts.tensor_fail)
                    throw numeric_error("integral_7fold: node doubling did not converge");
                res.value = cur;
                res.error_estimate = delta;
                res.nodes = n;
                return res;
            }
        }
    }

    // Monte Carlo over the ordered region: sequential conditional uniforms,
    // value = f * prod(interval widths).  Deterministic splitmix-style
    // uniforms so results are bit-identical across platforms; per-shard
    // streams reduced in shard order.
    const int workers = std::max(1, opts.workers);
    const uint64_t N = opts.mc_samples;
    std::vector<double> shard_sum(workers, 0.0), shard_sq(workers, 0.0);
    auto run_shard = [&](int w) {
        uint64_t state = opts.seed + 0x9E3779B97F4A7C15ULL * (w + 1);
        auto next_u01 = [&state]() {
            // splitmix64
            uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            z = z ^ (z >> 31);
            return (z >> 11) * 0x1.0p-53;
        };
        const uint64_t count = N / workers + (w < static_cast<int>(N % workers) ? 1 : 0);
        double sum = 0.0, sq = 0.0;
        for (uint64_t it = 0; it < count; ++it) {
            double t[7], S = 0.0, width = 1.0;
            bool dead = false;
            double lo = 1.0 / kSieveCutoffDen, hi = 0.125;
            for (int k = 0; k < 6; ++k) {
                if (hi <= lo) {
                    dead = true;
                    break;
                }
                t[k] = lo + (hi - lo) * next_u01();
                width *= (hi - lo);
                S += t[k];
                lo = t[k];
                hi = (1.0 - S) / (7.0 - k);  // upper bound for the next variable
            }
            if (dead) continue;
            const double t6 = t[5], S5 = S - t6;
            double val = inner_t6_c(S5 + t6, t6);
            for (int k = 0; k < 6; ++k) val /= t[k];
            sum += val * width;
            sq += (val * width) * (val * width);
        }
        shard_sum[w] = sum;
        shard_sq[w] = sq;
    };
    if (workers == 1) {
        run_shard(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_shard, w);
        for (auto& th : pool) th.join();
    }
    double sum = 0.0, sq = 0.0;
    for (int w = 0; w < workers; ++w) {  // fixed reduction order
        sum += shard_sum[w];
        sq += shard_sq[w];
    }
    const double mean = sum / static_cast<double>(N);
    const double var = std::max(0.0, sq / static_cast<double>(N) - mean * mean);
    res.value = mean;
    res.error_estimate = std::sqrt(var / static_cast<double>(N));
    res.nodes = 0;
    res.samples = N;
    return res;
}

BracketResult lower_bound_bracket(const GammaParams& p, I7Method method,
                                  const I7Options& opts) {
    BracketResult r;
    r.p = p;
    const double K = kSieveCutoffDen;
    r.first_term = std::log(K * p.xi - 1.0) / p.xi;
    Integral1d i1 = integral_1d(p);
    r.i1 = i1.closed_form;
    r.i1_quad_gap = std::fabs(i1.closed_form - i1.quadrature);
    r.i7 = integral_7fold(p, method, opts);
    r.bracket = r.first_term - p.lambda_w * r.i1 -
                (p.lambda_w * p.gamma / p.xi) * r.i7.value;
    return r;
}

}  // namespace pslab::params
