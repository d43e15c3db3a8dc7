#pragma once

// Ratio harness: for each supported pointwise estimate, measures
//   sup over a grid of |error| / (right-hand side without its constant),
// i.e. the implied constant of the estimate on a concrete
// (f, P, Y, n) instance. All estimates share that shape; kinds differ only
// in the denominator formula, the derivative order of the error, and the
// x-domain restriction, so a single parameterized `measure` covers them.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "approx/cheb.hpp"
#include "approx/construct.hpp"
#include "approx/function_model.hpp"
#include "approx/hermite.hpp"
#include "approx/numcore.hpp"
#include "approx/smoothness.hpp"

namespace approx {

enum class EstimateTag {
    classdir,      // rho^r * omega_k(f^{(r)}, rho)
    sim2,          // phi^{2r} * omega_k(f^{(r)}, phi^{2/k} n^{-2+2/k}), endpoint zone
    main_1_8,      // nu-th derivative, phi^{2(r-nu)} * omega_ell(...), endpoint zone
    tr1,           // nu-th derivative, rho^{r-nu} * omega_k(f^{(r)}, rho)
    tr2,           // |P^{(k+r)}| vs rho^{-k} * omega_k(f^{(r)}, rho)
    maingen_4g,    // contact point x0 of order m
    mainnew_4nnn,  // simultaneous contact-point version, sigma = max(m-nu+1, 0)
    mainnew1_78,   // node-set version with distance products
    an2,           // same form as classdir (for the constructed interpolant)
    an222,         // same form as mainnew1_78 (for the constructed interpolant)
    estwr1,        // (min{rho, dist(x,Z)})^r * scale
    corin,         // (min{dist(x,Z), rho})^alpha, log-corrected for integer alpha
    qmonotone,     // omega_1(f, min{phi^2, phi/n})
};

std::string to_string(EstimateTag tag);

struct EstimateKind {
    EstimateTag tag = EstimateTag::classdir;
    int k = 2;
    int r = 0;
    int nu = 0;          // derivative order of the measured error where applicable
    int ell = 0;         // modulus order; 0 means "use k"
    int m = 0;           // contact order at x0
    double x0 = 0.0;     // contact point
    double alpha = 1.0;  // Lipschitz-class exponent
    double scale = 1.0;  // external normalizer (seminorm / derivative sup norm)
};

struct RatioReport {
    EstimateKind kind;
    std::vector<double> x, num, den, ratio;   // ratio only where den > 0
    double A = 0.0;            // sup of ratio over resolvable points
    double worst_x = 0.0;
    std::size_t points_used = 0;
    std::size_t zero_den_points = 0;
    double max_num_at_zero_den = 0.0;
    bool zero_den_ok = true;   // numerator <= 1e-10 * sup|f| wherever den vanishes
    // measurement floor: error-type numerators below 256 eps * sup|f^(nu)|
    // (raised pointwise by the evaluator's own noise estimate when one is
    // supplied) are indistinguishable from exact agreement in double
    // precision, so such points are recorded but do not drive A
    double noise_floor = 0.0;
    std::size_t floor_points = 0;

    std::string to_csv() const;            // columns x, num, den, ratio
    std::string summary_json() const;      // {kind, params, A, points, ...}
};

// Jet evaluator abstraction: (x, nu) -> values of the polynomial and its
// first nu derivatives, so high-degree assembled polynomials can plug in
// their structured evaluation instead of coefficient differentiation.
using JetEval = std::function<std::vector<double>(double, int)>;

// optional per-point rounding-error scale of the evaluator at (x, nu); when
// supplied, the measurement floor at x is raised to 8x this estimate so that
// fp noise in high-degree structured evaluation cannot drive A
using NoiseFn = std::function<double(double, int)>;

RatioReport measure(const EstimateKind& kind, const FunctionModel& f, const JetEval& P,
                    const NodeMultiset& Y, int n, const EvalGrid& grid,
                    const NoiseFn& noise = {});
RatioReport measure(const EstimateKind& kind, const FunctionModel& f, const ChebPoly& P,
                    const NodeMultiset& Y, int n, const EvalGrid& grid);
RatioReport measure(const EstimateKind& kind, const FunctionModel& f, const AssembledPoly& P,
                    int n, const EvalGrid& grid);

// omega_k(f^{(deriv)}, .) sampled into an interpolable profile; cached by
// (f.label, deriv, k), so labels should uniquely identify models.
ModulusProfile omega_profile(const FunctionModel& f, int deriv, int k);

struct QMonotoneResult {
    bool ok = true;
    double worst = 0.0;   // most negative k-th difference found
    double at_x = 0.0;
    double at_u = 0.0;
};

// scans Delta_u^q(g, x) >= -1e-10 * sup|g| over a (u, x) lattice
QMonotoneResult qmonotone_test(const RealFn& g, int q, std::size_t u_count = 64,
                               std::size_t x_count = 257);

} // namespace approx
