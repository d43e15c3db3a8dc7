#pragma once

// The interpolatory constructor: smoothed step polynomials T_j (normalized
// antiderivatives of a nonnegative Jackson-type kernel concentrated at a
// partition node), the node-respecting blends R_j, the piecewise almost-best
// local approximant S, and the glued polynomial
//   P_n = p_n + sum_{i in Lambda} (p_i - p_{i+1}) R_i.
//
// Assembled polynomials reach degree ~C(k,r,s,mu)*n, so the flat Chebyshev
// coefficient vector is produced by pointwise assembly on a
// Chebyshev-Gauss-Lobatto grid plus one DCT; interpolation constraints are
// verified through structured jet evaluation (value/derivative propagation
// through the piece-and-blend expression), which stays accurate where
// coefficient-space differentiation of such degrees would not.

#include <memory>
#include <vector>

#include "approx/cheb.hpp"
#include "approx/function_model.hpp"
#include "approx/hermite.hpp"
#include "approx/numcore.hpp"
#include "approx/smoothness.hpp"

namespace approx {

// q((x - center)/halfwidth) with q in the Chebyshev T basis; kept in local
// coordinates so values on the owning interval never suffer the coefficient
// blow-up a global-basis rewrite of a narrow-interval fit would cause.
struct LocalPoly {
    ChebPoly q;
    double center = 0.0;
    double halfwidth = 1.0;
    // alternative representation: Newton form in unscaled coordinates; used
    // for pieces carrying Hermite data, where repeated nodes keep the
    // prescribed derivatives exact no matter how narrow the owning interval
    // (a narrow-interval Chebyshev rewrite loses them at rate eps/h^nu)
    NewtonForm newton;

    bool is_newton() const { return !newton.coeffs.empty(); }
    double eval(double x) const {
        return is_newton() ? newton.eval(x) : q.eval((x - center) / halfwidth);
    }
    std::vector<double> eval_jet(double x, int nu) const;
};

struct StepApproximant {
    enum class Kind { step, blend };
    Kind kind = Kind::step;
    int n = 0, j = 0;          // effective partition/node index (after doubling)
    int n_orig = 0, j_orig = 0;
    int r = 0, mu = 0;

    std::shared_ptr<const ChebPoly> A;   // kernel antiderivative on [-1,1]
    // step anchors
    double a = 0.0, b = 0.0, Aa = 0.0, Ab = 0.0;
    // blend anchors (A-side / B-side) with cached antiderivative values
    std::vector<double> a_anchors, b_anchors, Aa_vals, Ab_vals;

    int degree() const;
    double eval(double x) const;
    std::vector<double> eval_jet(double x, int nu) const;
    // jet of R - c for c in {0, 1}; the value entry is computed in a
    // cancellation-free log-magnitude form, so products of a huge jump
    // extrapolation with the exponentially small R - indicator stay accurate
    std::vector<double> eval_jet_centered(double x, int nu, double c) const;
    // values at the size-(N+1) Chebyshev-Gauss-Lobatto grid, DCT-accelerated
    std::vector<double> values_on_lobatto(std::size_t N) const;
    // values of R - [x_g >= node] on the Lobatto grid, same stable form
    std::vector<double> values_on_lobatto_centered(std::size_t N, double node) const;
};

// mu <= 0 falls back to a small default; the kernel power is
// ceil((mu+1)/2) so the measured decay exponent is >= mu.
StepApproximant build_step_poly(int n, int j, double a, double b, int mu);

// Adjoins +/-1 (multiplicity r+1) to Y and applies the partition-doubling
// reduction when (x_{j+1}, x_{j-1}) meets Y; throws if a node sits strictly
// inside (x_{j+1}, x_j), where no reduction can help.
StepApproximant build_R_j(int n, int j, const NodeMultiset& Y, int r, int mu);

struct BuildSOptions {
    int mu = 0;                       // 0 = auto (k + r + 1)
    bool enforce_proof_bound = false; // raise instead of recording when n is small
};

struct PiecewiseS {
    int n = 0, k = 0, r = 0, k_eff = 0;
    NodeMultiset Y;

    struct Neighborhood {
        int ilo = 0, ihi = 0;   // member intervals I_ilo..I_ihi (ilo <= ihi)
        Interval span;
        int flat_nodes = 0;     // interpolation conditions inside
    };
    std::vector<Neighborhood> neighborhoods;
    std::vector<int> lambda_set;        // jump indices, subset of 1..n-1
    std::vector<int> piece_index;       // interval i (1..n) -> polys[piece_index[i-1]]
    std::vector<LocalPoly> polys;

    bool below_proof_bound = false;
    double proof_bound_n = 0.0;

    const LocalPoly& piece(int i) const { return polys[static_cast<std::size_t>(piece_index.at(static_cast<std::size_t>(i - 1)))]; }
    double eval(double x) const;                       // right-continuous at nodes
    std::vector<double> eval_jet(double x, int nu) const;
};

PiecewiseS build_S(const FunctionModel& f, const NodeMultiset& Y, int k, int r, int n,
                   const BuildSOptions& opts = {});

struct AssembledPoly {
    ChebPoly flat;
    PiecewiseS S;
    std::vector<std::pair<int, StepApproximant>> blends;   // (jump index, R_i)
    int mu = 0;

    double eval(double x) const { return flat.eval(x); }
    // stable at any degree; use this (not flat coefficients) for derivatives
    std::vector<double> eval_jet_structured(double x, int nu) const;
    // rounding-error scale of eval_jet_structured at (x, nu): eps times the
    // sum of absolute term magnitudes in the blend expansion; values of
    // |f^(nu) - P^(nu)| at or below this scale are fp noise, not signal
    double eval_noise(double x, int nu) const;
};

AssembledPoly assemble_Pn(const PiecewiseS& S, int mu = 0);

struct InterpolationReport {
    double max_abs_resid = 0.0;
    double max_rel_resid = 0.0;   // normalized by max(1, |f^(nu)(y)|)
};
InterpolationReport check_interpolation(const AssembledPoly& P, const FunctionModel& f);

struct MinimaxResult {
    ChebPoly P;
    double objective = 0.0;
    int iterations = 0;
    bool converged = false;
};

// min over polynomials of degree <= n of max_grid |f - P| / w subject to
// P^{(j)}(z_i) = f^{(j)}(z_i), j < mult(z_i); Lawson-style iteratively
// reweighted least squares on the constraint-eliminated basis
// P = L_Y + Omega_Y * Q.
MinimaxResult constrained_minimax(const FunctionModel& f, const NodeMultiset& Y, int n,
                                  const RealFn& w, const EvalGrid& grid);

// P + ((1+x)/2) (f-P)(1) + ((1-x)/2) (f-P)(-1): endpoint interpolation without
// touching the second derivative.
ChebPoly boolean_sum_endpoint(const FunctionModel& f, const ChebPoly& P);

} // namespace approx
