#pragma once

#include <functional>
#include <vector>

namespace pslab::quad {

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by
// Newton iteration on P_n and cached.
struct GaussRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

// Adaptive Gauss-Kronrod (G7, K15).  Recursive bisection until the local
// error estimate is below tol (absolute), with a depth cap.  Throws
// numeric_error on failure to converge.
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double abs_tol = 1e-13, int max_depth = 64);

}  // namespace pslab::quad
