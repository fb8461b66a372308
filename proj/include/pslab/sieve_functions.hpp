#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace pslab::sievefn {

// Euler-Mascheroni constant, 17 digits.
inline constexpr double kEulerGamma = 0.57721566490153286;

// Tabulated upper/lower linear-sieve functions F, f on (0, s_max].
//
// Closed forms hold on the base windows
//     F(s) = 2 e^{C0} / s            for 0 < s <= 3,
//     f(s) = 0                       for 0 < s <= 2,
//     f(s) = 2 e^{C0} log(s-1) / s   for 2 <= s <= 4,
// and the pair extends past them through
//     d/ds (s F(s)) = f(s-1),   d/ds (s f(s)) = F(s-1),
// integrated on the grid (trapezoid, step h_s) in ascending s.  Closed
// forms take precedence wherever they apply; the cumulative integrals are
// read out with 4-point (cubic) interpolation so finite differences of the
// table stay clean.
class SieveFunctionTable {
public:
    explicit SieveFunctionTable(double s_max = 6.0, double h_s = 1e-4);

    double s_max() const { return s_max_; }
    double step() const { return h_s_; }

    double eval_F(double s) const;
    double eval_f(double s) const;

    // |central difference of sF(s) minus f(s-1)|, same for the f equation.
    std::pair<double, double> dde_residual(double s, double h) const;

private:
    double g_F(double s) const;  // s * F(s)
    double g_f(double s) const;  // s * f(s)
    double interp(const std::vector<double>& g, double s) const;

    double s_max_, h_s_;
    size_t n_;
    std::vector<double> gF_;  // s_i * F(s_i) on the grid s_i = i * h_s
    std::vector<double> gf_;
};

// Shared default table (s_max = 6, h_s = 1e-4), built on first use.
const SieveFunctionTable& default_table();

double eval_F(double s);
double eval_f(double s);
std::pair<double, double> dde_residual(double s, double h);

}  // namespace pslab::sievefn
