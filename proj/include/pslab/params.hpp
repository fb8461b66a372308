#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pslab::params {

// Weighted-sieve cutoff: z = x^{1/17.41} throughout.
inline constexpr double kSieveCutoffDen = 17.41;

// Parameter bundle (gamma, eta, epsilon) with every derived quantity.
struct GammaParams {
    double gamma;
    double eta;
    double epsilon;
    double xi;        // (140 gamma - 99)/270 - eta
    double u;         // 1/xi + epsilon
    double lambda_w;  // 1/(9 - u - epsilon)
    double z_exp;     // 1/17.41
};

GammaParams make_params(double gamma, double eta = 1e-6, double epsilon = 1e-9);

// Type I/II bilinear window exponents (as powers of X).
struct BalogFriedlanderWindow {
    double a_frak;  // 2 - (3 xi + 1)/gamma - eta
    double b_frak;  // (11 + 60 xi - 11 gamma)/(14 gamma) + eta
    double c_frak;  // (11 + 60 xi + 30 gamma)/(55 gamma) - eta
};

BalogFriedlanderWindow bf_window(const GammaParams& p);

struct Constraint {
    std::string name;
    double slack;  // positive means satisfied
    bool pass;
};

struct ConstraintReport {
    std::vector<Constraint> items;
    bool all_pass;
    // |(1 - a) - c/2| evaluated with every eta term dropped: the two sides
    // coincide identically under the xi(gamma) definition.
    double balog_degenerate_gap;
};

ConstraintReport check_admissible(const GammaParams& p);

// An exponent of X that is affine in mu = log_X M.
struct BudgetTerm {
    std::string label;
    double c0;    // constant part
    double c_mu;  // coefficient of mu
    double value_at(double mu) const { return c0 + c_mu * mu; }
};

struct BudgetTermResult {
    BudgetTerm term;
    double max_value;  // over [mu_lo, mu_hi]; attained at an endpoint
    double mu_at_max;
    double delta;      // target - max_value
};

struct BudgetReport {
    std::string name;
    double target;  // 2 for the squared budgets, 1 for Type I
    double mu_lo, mu_hi;
    bool window_nonempty;
    std::vector<BudgetTermResult> terms;
    double min_delta;
    double t_exponent_slack;  // exponent of T at the top of the window; > 0 means T > 1
    bool pass;                // window nonempty, every delta > 0, T feasible
};

BudgetReport exponent_budget_typeII(const GammaParams& p);
BudgetReport exponent_budget_typeI(const GammaParams& p);
BudgetReport exponent_budget_S0(const GammaParams& p);

// int_u^{17.41} (t - u) / (t (xi t - 1)) dt, by adaptive quadrature and in
// closed form; the two must agree to 1e-10.
struct Integral1d {
    double quadrature;
    double closed_form;
};
Integral1d integral_1d(const GammaParams& p);

enum class I7Method { tensor_gauss, monte_carlo };

struct I7Options {
    uint64_t mc_samples = 10'000'000;
    uint64_t seed = 0x5EED;
    int workers = 2;
    double tensor_tol = 1e-7;   // node-doubling stop
    double tensor_fail = 1e-6;  // past the node cap, bigger delta is an error
};

struct I7Result {
    double value;
    double error_estimate;  // node-doubling delta, or MC standard error
    int nodes;              // per-dimension nodes (tensor) or 0
    uint64_t samples;       // MC samples or 0
    uint64_t seed;
};

// The 7-fold simplex integral of the 8-prime main term, innermost variable
// eliminated by partial fractions.  Does not depend on the parameters
// beyond validity (the region involves only 17.41 and the unit simplex).
I7Result integral_7fold(const GammaParams& p, I7Method method,
                        const I7Options& opts = {});

struct BracketResult {
    GammaParams p;
    double first_term;  // log(17.41 xi - 1)/xi
    double i1;          // closed-form 1d integral
    double i1_quad_gap;
    I7Result i7;
    double bracket;     // first - lambda*i1 - (lambda gamma / xi) * i7
};

BracketResult lower_bound_bracket(const GammaParams& p,
                                  I7Method method = I7Method::tensor_gauss,
                                  const I7Options& opts = {});

}  // namespace pslab::params
