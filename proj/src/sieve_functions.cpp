#include "pslab/sieve_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace pslab::sievefn {

namespace {
const double kC = 2.0 * std::exp(kEulerGamma);  // 2 e^{C0}

double F_closed(double s) { return kC / s; }                       // s in (0, 3]
double f_closed(double s) { return s <= 2.0 ? 0.0 : kC * std::log(s - 1.0) / s; }  // s in (0, 4]
}  // namespace

SieveFunctionTable::SieveFunctionTable(double s_max, double h_s)
    : s_max_(s_max), h_s_(h_s) {
    if (!(s_max > 4.0) || !(h_s > 0) || h_s > 1e-2)
        throw std::domain_error("SieveFunctionTable: need s_max > 4 and 0 < h_s <= 1e-2");
    n_ = static_cast<size_t>(std::llround(s_max / h_s));
    gF_.assign(n_ + 1, 0.0);
    gf_.assign(n_ + 1, 0.0);
    // Shift by exactly 1/h_s grid cells to read the delayed argument.
    const size_t shift = static_cast<size_t>(std::llround(1.0 / h_s));

    auto f_at = [&](size_t i) {  // f(s_i) with closed form preferred
        double s = i * h_s_;
        if (s <= 4.0) return f_closed(s);
        return gf_[i] / s;
    };
    auto F_at = [&](size_t i) {
        double s = i * h_s_;
        if (s <= 3.0) return F_closed(s);
        return gF_[i] / s;
    };

    for (size_t i = 1; i <= n_; ++i) {
        double s = i * h_s_;
        if (s <= 3.0 + 1e-15) {
            gF_[i] = kC;  // s * (2e^{C0}/s)
        } else {
            // d/ds(sF) = f(s-1); trapezoid step from s_{i-1}
            double fa = f_at(i - 1 - shift);  // f(s_{i-1} - 1)
            double fb = f_at(i - shift);      // f(s_i - 1)
            gF_[i] = gF_[i - 1] + 0.5 * h_s_ * (fa + fb);
        }
        if (s <= 4.0 + 1e-15) {
            gf_[i] = s * f_closed(s);
        } else {
            double Fa = F_at(i - 1 - shift);
            double Fb = F_at(i - shift);
            gf_[i] = gf_[i - 1] + 0.5 * h_s_ * (Fa + Fb);
        }
    }
}

double SieveFunctionTable::interp(const std::vector<double>& g, double s) const {
    // 4-point Lagrange on the uniform grid.
    double x = s / h_s_;
    long i1 = static_cast<long>(std::floor(x));
    if (i1 < 1) i1 = 1;
    if (i1 > static_cast<long>(n_) - 2) i1 = static_cast<long>(n_) - 2;
    double t = x - i1;  // in [0,1] away from edges
    const double ym1 = g[i1 - 1], y0 = g[i1], y1 = g[i1 + 1], y2 = g[i1 + 2];
    const double a = (-t * (t - 1.0) * (t - 2.0)) / 6.0;
    const double b = ((t + 1.0) * (t - 1.0) * (t - 2.0)) / 2.0;
    const double c = (-(t + 1.0) * t * (t - 2.0)) / 2.0;
    const double d = ((t + 1.0) * t * (t - 1.0)) / 6.0;
    return a * ym1 + b * y0 + c * y1 + d * y2;
}

double SieveFunctionTable::g_F(double s) const {
    if (s <= 3.0) return kC;
    return interp(gF_, s);
}

double SieveFunctionTable::g_f(double s) const {
    if (s <= 4.0) return s * f_closed(s);
    return interp(gf_, s);
}

double SieveFunctionTable::eval_F(double s) const {
    if (!(s > 0.0) || s > s_max_)
        throw std::domain_error("eval_F: s outside (0, s_max]");
    if (s <= 3.0) return F_closed(s);
    return g_F(s) / s;
}

double SieveFunctionTable::eval_f(double s) const {
    if (!(s > 0.0) || s > s_max_)
        throw std::domain_error("eval_f: s outside (0, s_max]");
    if (s <= 2.0) return 0.0;
    if (s <= 4.0) return f_closed(s);
    return g_f(s) / s;
}

std::pair<double, double> SieveFunctionTable::dde_residual(double s, double h) const {
    if (!(h > 0.0) || h > 1e-3)
        throw std::domain_error("dde_residual: need 0 < h <= 1e-3");
    if (!(s > 2.0 + h) || !(s < s_max_ - h))
        throw std::domain_error("dde_residual: s must lie in (2+h, s_max-h)");
    auto gF = [&](double t) { return t * eval_F(t); };
    auto gf = [&](double t) { return t * eval_f(t); };
    double dF = (gF(s + h) - gF(s - h)) / (2.0 * h);
    double df = (gf(s + h) - gf(s - h)) / (2.0 * h);
    double rF = std::fabs(dF - eval_f(s - 1.0));
    double rf = std::fabs(df - eval_F(s - 1.0));
    return {rF, rf};
}

const SieveFunctionTable& default_table() {
    static const SieveFunctionTable table;
    return table;
}

double eval_F(double s) { return default_table().eval_F(s); }
double eval_f(double s) { return default_table().eval_f(s); }
std::pair<double, double> dde_residual(double s, double h) {
    return default_table().dde_residual(s, h);
}

}  // namespace pslab::sievefn
