#pragma once

// k-th symmetric differences and moduli of smoothness, the majorant
// classes defined by "nondecreasing, t^{-alpha} * phi(t) nonincreasing"
// (exactly, and up to a slack factor M), Stechkin-type regularization of
// a sampled modulus, the piecewise power/constant majorant that belongs
// to every relaxed class but no exact one, and a Marchaud-inequality
// probe.
//
// The modulus estimator is a grid supremum (64 log-spaced step sizes per
// t, times the supplied x grid) and is therefore a certified *lower*
// bound of the true supremum; everything that consumes it is calibrated
// against that reading.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "approx/numcore.hpp"

namespace approx {

using RealFn = std::function<double(double)>;

// k-th symmetric difference with step u at x; exactly 0 when the stencil
// x +/- k*u/2 leaves J.
double finite_difference(const RealFn& f, int k, double u, double x, Interval J);

// sup over u in (0,t] (u_count log-spaced values, largest = t) and x in xgrid
double omega_k(const RealFn& f, int k, double t, Interval J, const EvalGrid& xgrid,
               int u_count = 64);

// omega_k sampled on a t grid, with the cumulative max applied so the
// profile is nondecreasing; queries interpolate log-log-linearly and
// extrapolate below the smallest sample with the power fitted there.
class ModulusProfile {
public:
    ModulusProfile() = default;
    ModulusProfile(std::vector<double> ts, std::vector<double> ws, int k, Interval J);

    static ModulusProfile build(const RealFn& f, int k, Interval J, const EvalGrid& xgrid,
                                const std::vector<double>& ts, int u_count = 64);

    double eval(double t) const;
    const std::vector<double>& ts() const { return ts_; }
    const std::vector<double>& ws() const { return ws_; }
    int k() const { return k_; }

private:
    std::vector<double> ts_, ws_;
    int k_ = 0;
    Interval J_;
};

// ---- majorant classes -------------------------------------------------

struct MajorantCheck {
    bool ok = true;
    // witness pair on failure: t1 < t2 with the violated inequality
    double t1 = 0.0, t2 = 0.0;
    enum class Kind { none, not_nondecreasing, ratio_increasing } kind = Kind::none;
};

// phi nondecreasing and t^{-alpha} phi(t) nonincreasing, both up to slack M
// (M = 1 recovers the exact class), checked on all grid pairs.
MajorantCheck check_majorant_class(const RealFn& phi, double alpha, double M,
                                   const std::vector<double>& tgrid);

struct StechkinResult {
    std::vector<double> t;
    std::vector<double> w_tilde;   // running (cumulative) max of the input
    std::vector<double> w_reg;     // t^alpha * sup_{u >= t} w_tilde(u)/u^alpha
};

// Requires the input samples to satisfy the relaxed class inequalities with
// the given M (throws std::invalid_argument naming the witness pair
// otherwise); the output then satisfies w <= w_reg <= M^2 w samplewise and
// lies in the exact class on the grid.
StechkinResult stechkin_regularize(const std::vector<double>& ts, const std::vector<double>& ws,
                                   double alpha, double M);

// ---- pathological majorant ---------------------------------------------
//
// Built from the breakpoint recursion
//   u(t) = 2 / (2 - alpha * ln t),  (t_0, phi_0) = (1/2, (1/2)^{alpha/2}),
//   t_{2j+1}: u(t_{2j+1}) = phi_{2j},   phi_{2j+1} = phi_{2j},
//   (t_{2j+2}, phi_{2j+2}): intersection of lambda_j t^alpha
//     (normalized by lambda_j t_{2j+1}^alpha = phi_{2j}) with t^{(j+1)alpha/(j+2)}.
// phi is constant on [t_{2j+1}, t_{2j}] and lambda_j t^alpha on
// [t_{2j+2}, t_{2j+1}]. Breakpoints shrink super-exponentially, so the
// ledger stores ln t_j, ln phi_j exactly; construction stops with an error
// when ln t_j itself would leave the double range.
class PathologicalPhi {
public:
    PathologicalPhi(double alpha, int depth);

    double alpha() const { return alpha_; }
    int depth() const { return depth_; }
    double ln_t(int j) const { return ln_t_.at(static_cast<std::size_t>(j)); }
    double ln_phi(int j) const { return ln_phi_.at(static_cast<std::size_t>(j)); }
    double t(int j) const { return std::exp(ln_t(j)); }
    double phi_at(int j) const { return std::exp(ln_phi(j)); }

    // defined on [t_depth, t_0]
    double eval(double t) const;

    // scan breakpoint pairs (t_{2j}, t_{2j0}), j > j0, for a violation of the
    // "t^{-beta} phi nonincreasing up to M" half of the relaxed class; returns
    // the witness (ok = false means a violation WAS found, which is the
    // expected outcome for beta < alpha).
    MajorantCheck scan_non_membership(double beta, double M) const;

private:
    double alpha_;
    int depth_;
    std::vector<double> ln_t_, ln_phi_;
    std::vector<double> ln_lambda_;   // per level j
};

// ---- Marchaud probe -----------------------------------------------------

struct MarchaudRow {
    double t, lhs, rhs, ratio;
};

// lhs = omega_1(f, t), rhs = t * ( integral_t^{|J|} omega_k(f,u)/u^2 du
//        + sup|f| / |J| ), integral by trapezoid on a log-spaced u grid.
std::vector<MarchaudRow> marchaud_check(const RealFn& f, int k, Interval J,
                                        const std::vector<double>& ts, const EvalGrid& xgrid);

} // namespace approx
