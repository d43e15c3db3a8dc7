#include "approx/poly_checks.hpp"

#include <cmath>
#include <stdexcept>

namespace approx {

DlbRatio dlb_ratio(const ChebPoly& P, int n, const std::function<double(double)>& phi,
                   double s, int nu, const EvalGrid& grid) {
    if (nu < 0) throw std::invalid_argument("dlb_ratio: negative derivative order");
    ChebPoly D = P;
    for (int v = 0; v < nu; ++v) D = D.derivative();
    double lhs = 0.0, rhs = 0.0;
    for (double x : grid) {
        double r = rho(n, x);
        double w = phi(r);
        if (!(w > 0.0)) throw std::domain_error("dlb_ratio: phi(rho_n(x)) must be positive");
        lhs = std::max(lhs, std::pow(r, s + nu) * std::abs(D.eval(x)) / w);
        rhs = std::max(rhs, std::pow(r, s) * std::abs(P.eval(x)) / w);
    }
    return {lhs, rhs, rhs > 0.0 ? lhs / rhs : 0.0};
}

DzyadykPointwise dzyadyk_pointwise_check(const ChebPoly& P, int n, int m, double x0,
                                         const EvalGrid& grid) {
    if (m < 1) throw std::invalid_argument("dzyadyk_pointwise_check: m must be >= 1");
    double sup = 0.0;
    for (double x : grid) {
        double denom = std::pow(std::abs(x - x0) + rho(n, x), m);
        sup = std::max(sup, std::abs(P.eval(x)) / denom);
    }
    double deriv = std::abs(P.derivative().eval(x0));
    if (sup > 0.0) deriv /= sup;   // normalize so sup |P| / (|x-x0|+rho)^m = 1
    double rp = std::pow(rho(n, x0), m - 1);
    return {deriv, rp, rp > 0.0 ? deriv / rp : 0.0};
}

SharpnessExample dz59_sharpness(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("dz59_sharpness: n must be odd");
    // d/dx T_n(n x) at 0 is n * T_n'(0); the derivative coefficients of T_n
    // are exact small integers, so this is exact arithmetic
    double tn_prime_0 = ChebPoly::basis(n).derivative().eval(0.0);
    double deriv = static_cast<double>(n) * std::abs(tn_prime_0);
    double nn = static_cast<double>(n);
    double naive = nn / rho(n, 0.0);   // * max(1,|T_n(0)|) = 1 for odd n
    return {n, deriv, nn * nn, naive, deriv > naive};
}

} // namespace approx
