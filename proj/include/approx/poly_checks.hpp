#pragma once

// Numerical checkers for weighted polynomial inequalities: the
// derivative-vs-function ratio with a rho_n weight and a majorant phi in
// the denominator, the pointwise derivative bound at a fixed x0, and the
// classical odd-degree example showing the n * rho_n^{-1} threshold is
// beaten by a factor approaching the sharp one.

#include <functional>

#include "approx/cheb.hpp"
#include "approx/numcore.hpp"

namespace approx {

struct DlbRatio {
    double lhs;    // sup_x rho_n^{s+nu}(x) |P^(nu)(x)| / phi(rho_n(x))
    double rhs;    // sup_x rho_n^s(x)      |P(x)|     / phi(rho_n(x))
    double ratio;  // lhs / rhs  (0 when P == 0)
};

DlbRatio dlb_ratio(const ChebPoly& P, int n, const std::function<double(double)>& phi,
                   double s, int nu, const EvalGrid& grid);

struct DzyadykPointwise {
    double deriv_at_x0;    // |P'(x0)| after normalizing sup |P|/(|x-x0|+rho_n)^m to 1
    double rho_power;      // rho_n(x0)^{m-1}
    double ratio;          // deriv / rho_power
};

DzyadykPointwise dzyadyk_pointwise_check(const ChebPoly& P, int n, int m, double x0,
                                         const EvalGrid& grid);

struct SharpnessExample {
    int n;
    double deriv_at_0;       // |d/dx T_n(n x)| at 0, exact coefficient arithmetic
    double expected;         // n^2
    double naive_threshold;  // n * rho_n(0)^{-1} * max(1, |T_n(0)|) = n^3/(n+1)
    bool exceeds;            // deriv_at_0 > naive_threshold
};

// n must be odd (T_n(0) = 0 is what makes the example work)
SharpnessExample dz59_sharpness(int n);

} // namespace approx
