#pragma once

// Sharpness constructions: functions whose pointwise approximation error
// provably cannot beat the measured estimates, plus finite-range divergence
// demonstrations against minimax fits. Limit statements are reported as
// growth certificates over a probe window, never as limit claims.

#include <functional>
#include <string>
#include <vector>

#include "approx/cheb.hpp"
#include "approx/construct.hpp"
#include "approx/function_model.hpp"
#include "approx/numcore.hpp"
#include "approx/smoothness.hpp"

namespace approx {

enum class NegativeCase { case_i, case_ii, case_iii, weak, sobolev, lip };

enum class EpsKind { inv_log, power };   // 1/|ln x| or x^{1/(2k)}

struct NegativeInstance {
    NegativeInstance(NegativeCase kind_, int k_, int r_, FunctionModel F_)
        : kind(kind_), k(k_), r(r_), F(std::move(F_)) {}

    NegativeCase kind;
    int k = 1;
    int r = 0;
    FunctionModel F;
    double singular_point = 0.0;
    std::vector<double> probes;          // strictly decreasing toward the singular point

    RealFn epsilon_hat;                  // the (floored) epsilon used in denominators

    // staircase ledger (oscillating-modulus construction); exponents are kept
    // in log space because the deep points underflow double range
    std::vector<double> ln_x;            // ln x_0, ln x_1, ..., ln x_depth
    std::vector<double> ln_xhat;         // ln x-hat_{2j+1}, in order of j
    std::vector<double> ln_omega_bp;     // ln of segment boundaries, descending
    RealFn omega;                        // the prescribed step modulus
    RealFn f_core;                       // the function whose r-th primitive is F
    bool ordering_ok = true;             // 2 x_{2j+2} <= x-hat_{2j+1} <= x_{2j+1} <= x_{2j}/2
    bool depth_truncated = false;        // ledger stopped early to avoid exp underflow
    int built_depth = 0;

    double weak_epsilon = 0.0;
};

NegativeInstance build_case_i(int r);
NegativeInstance build_case_ii(int k, int r, EpsKind eps, int depth);
// modulus-order reduction of the oscillating construction (uses
// epsilon^{k/(r+1)} at order r+1); requires r >= 1
NegativeInstance build_case_iii(int k, int r, EpsKind eps, int depth);
NegativeInstance build_weak(int k, int r, double epsilon);
NegativeInstance build_sobolev(int r, double z);
NegativeInstance build_lip(double alpha, double z);

// degree-n weighted-minimax fit on fit_dom, computed in mapped coordinates
// so the Chebyshev basis stays well conditioned
struct FitResult {
    ChebPoly P;       // in u = (2x - a - b)/(b - a)
    Interval dom;
    double objective = 0.0;

    double eval(double x) const { return P.eval((2.0 * x - dom.a - dom.b) / dom.length()); }
};
FitResult minimax_fit(const FunctionModel& f, int n, Interval fit_dom,
                      std::size_t grid_points = 1201);

struct BlowupRow {
    int m = 0;
    double x = 0.0, num = 0.0, den = 0.0, ratio = 0.0;
};

struct BlowupReport {
    std::vector<BlowupRow> rows;         // along the probe sequence
    double slope = 0.0;                  // least-squares slope of ln(ratio) vs m
    bool one_signed_near_zero = false;   // fit has constant sign on the probe tail
    double sign_bound_slack = 0.0;       // min over probes of ratio / lower bound (if one-signed)

    bool nondecreasing(double slack = 0.05) const;
    double last_over_first() const;
    std::string to_csv() const;          // columns m, x, num, den, ratio
};

BlowupReport blowup_demo(const NegativeInstance& inst, const FitResult& fit);
BlowupReport blowup_demo(const NegativeInstance& inst, int fit_degree);

struct WeakSweepRow {
    double eps = 0.0;
    double sup_ratio = 0.0;
};

struct WeakSweepResult {
    std::vector<WeakSweepRow> rows;      // eps = 2^{-1}, 2^{-2}, ... until found
    bool found = false;
    double eps_star = 0.0;               // first eps with sup_ratio >= M
    double ratio_at_star = 0.0;
    double ratio_at_half = 0.0;          // sup ratio at eps_star / 2
};

// halving sweep: smallest eps = 2^{-j} whose weak instance already forces the
// normalized error of the degree-n minimax fit above M on [0, delta]
WeakSweepResult weak_sweep(int k, int r, int n, double M, double delta, int max_j = 20);

} // namespace approx
