#include "approx/construct.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace approx {

namespace {

// ---- truncated jets (arrays of derivatives 0..nu) -------------------------

using Jet = std::vector<double>;

Jet jet_const(double v, int nu) {
    Jet j(static_cast<std::size_t>(nu) + 1, 0.0);
    j[0] = v;
    return j;
}

Jet jet_mul(const Jet& a, const Jet& b) {
    std::size_t n = a.size();
    Jet out(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        double binom = 1.0;
        for (std::size_t i = 0; i <= v; ++i) {
            out[v] += binom * a[i] * b[v - i];
            binom = binom * static_cast<double>(v - i) / static_cast<double>(i + 1);
        }
    }
    return out;
}

Jet jet_pow(const Jet& a, int p) {
    Jet out = jet_const(1.0, static_cast<int>(a.size()) - 1);
    for (int i = 0; i < p; ++i) out = jet_mul(out, a);
    return out;
}

// ---- Jackson-type kernel ---------------------------------------------------

// (sin(m t/2) / (m sin(t/2)))^{2p}: nonnegative even trig polynomial of
// degree p(m-1), i.e. an algebraic polynomial of that degree in x = cos t.
double jackson_value(int m, int p, double theta) {
    double s = std::sin(0.5 * theta);
    double ratio;
    if (std::abs(s) < 1e-300) {
        ratio = 1.0;
    } else {
        ratio = std::sin(0.5 * m * theta) / (static_cast<double>(m) * s);
    }
    return std::pow(ratio * ratio, p);
}

// Chebyshev coefficients of the kernel (as a function of x = cos t);
// cached per (m, p).
const std::vector<double>& jackson_coeffs(int m, int p) {
    static std::map<std::pair<int, int>, std::vector<double>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{m, p}];
    if (slot.empty()) {
        std::size_t L = static_cast<std::size_t>(p) * static_cast<std::size_t>(m - 1);
        if (L < 2) L = 2;
        std::vector<double> vals(L + 1);
        for (std::size_t i = 0; i <= L; ++i)
            vals[i] = jackson_value(m, p, std::numbers::pi * static_cast<double>(i) /
                                              static_cast<double>(L));
        slot = cheb_coeffs_from_vals(vals);   // exact: the kernel is in the span
    }
    return slot;
}

int kernel_power(int mu) { return std::max(2, (mu + 2) / 2); }

// antiderivative of the kernel recentered at the partition node angle
// theta_j (symmetrized so it stays a cosine series)
std::shared_ptr<const ChebPoly> kernel_antiderivative(int n_eff, int j_eff, int p) {
    const auto& c = jackson_coeffs(n_eff, p);
    double theta_j = std::numbers::pi * static_cast<double>(j_eff) / static_cast<double>(n_eff);
    std::vector<double> b(c.size());
    for (std::size_t l = 0; l < c.size(); ++l)
        b[l] = 2.0 * c[l] * std::cos(static_cast<double>(l) * theta_j);
    ChebPoly K((std::vector<double>(b)));
    return std::make_shared<const ChebPoly>(K.antiderivative());
}

bool node_strictly_inside(const NodeMultiset& Y, double lo, double hi) {
    for (double z : Y.distinct())
        if (lo < z && z < hi) return true;
    return false;
}

} // namespace

// ---- LocalPoly -------------------------------------------------------------

std::vector<double> LocalPoly::eval_jet(double x, int nu) const {
    if (is_newton()) return newton.eval_jet(x, nu);
    auto jet = q.eval_jet((x - center) / halfwidth, nu);
    double scale = 1.0;
    for (int v = 1; v <= nu; ++v) {
        scale /= halfwidth;
        jet[static_cast<std::size_t>(v)] *= scale;
    }
    return jet;
}

// ---- StepApproximant --------------------------------------------------------

int StepApproximant::degree() const {
    int dA = A ? A->degree() : 0;
    if (kind == Kind::step) return dA;
    int l = static_cast<int>(a_anchors.size());
    int m = static_cast<int>(b_anchors.size());
    return (r + 1) * (r + 1) * l * m * dA;
}

double StepApproximant::eval(double x) const {
    double Ax = A->eval(x);
    if (kind == Kind::step) return (Ax - Aa) / (Ab - Aa);
    double prod = 1.0;
    for (std::size_t kk = 0; kk < b_anchors.size(); ++kk) {
        double Q = 1.0;
        for (std::size_t ii = 0; ii < a_anchors.size(); ++ii) {
            double T = (Ax - Aa_vals[ii]) / (Ab_vals[kk] - Aa_vals[ii]);
            double Tp = 1.0;
            for (int e = 0; e <= r; ++e) Tp *= T;
            Q *= Tp;
        }
        double om = 1.0 - Q;
        double omp = 1.0;
        for (int e = 0; e <= r; ++e) omp *= om;
        prod *= omp;
    }
    return 1.0 - prod;
}

std::vector<double> StepApproximant::eval_jet(double x, int nu) const {
    auto Aj = A->eval_jet(x, nu);
    if (kind == Kind::step) {
        Jet out(Aj);
        double inv = 1.0 / (Ab - Aa);
        out[0] = (Aj[0] - Aa) * inv;
        for (int v = 1; v <= nu; ++v) out[static_cast<std::size_t>(v)] *= inv;
        return out;
    }
    Jet prod = jet_const(1.0, nu);
    for (std::size_t kk = 0; kk < b_anchors.size(); ++kk) {
        Jet Q = jet_const(1.0, nu);
        for (std::size_t ii = 0; ii < a_anchors.size(); ++ii) {
            double inv = 1.0 / (Ab_vals[kk] - Aa_vals[ii]);
            Jet T(Aj);
            T[0] = (Aj[0] - Aa_vals[ii]) * inv;
            for (int v = 1; v <= nu; ++v) T[static_cast<std::size_t>(v)] *= inv;
            Q = jet_mul(Q, jet_pow(T, r + 1));
        }
        Jet om = Q;
        om[0] = 1.0 - Q[0];
        for (int v = 1; v <= nu; ++v) om[static_cast<std::size_t>(v)] = -Q[static_cast<std::size_t>(v)];
        prod = jet_mul(prod, jet_pow(om, r + 1));
    }
    Jet out = prod;
    out[0] = 1.0 - prod[0];
    for (int v = 1; v <= nu; ++v) out[static_cast<std::size_t>(v)] = -prod[static_cast<std::size_t>(v)];
    return out;
}

namespace {

// stable R - c from log|W| and sign(W), where R = 1 - W and W = prod (1-Q)^{r+1}
double centered_from_log(double slog, int sign, bool w_zero, double c) {
    if (w_zero) return 1.0 - c;
    double w_mag = std::exp(slog);
    if (c == 1.0) return sign > 0 ? -w_mag : w_mag;
    return sign > 0 ? -std::expm1(slog) : 1.0 + w_mag;
}

} // namespace

std::vector<double> StepApproximant::eval_jet_centered(double x, int nu, double c) const {
    auto Aj = A->eval_jet(x, nu);
    if (kind == Kind::step) {
        Jet out(Aj);
        double inv = 1.0 / (Ab - Aa);
        out[0] = (Aj[0] - Aa) * inv - c;
        for (int v = 1; v <= nu; ++v) out[static_cast<std::size_t>(v)] *= inv;
        return out;
    }
    Jet prod = jet_const(1.0, nu);
    double slog = 0.0;
    int sign = 1;
    bool w_zero = false;
    for (std::size_t kk = 0; kk < b_anchors.size(); ++kk) {
        Jet Q = jet_const(1.0, nu);
        for (std::size_t ii = 0; ii < a_anchors.size(); ++ii) {
            double inv = 1.0 / (Ab_vals[kk] - Aa_vals[ii]);
            Jet T(Aj);
            T[0] = (Aj[0] - Aa_vals[ii]) * inv;
            for (int v = 1; v <= nu; ++v) T[static_cast<std::size_t>(v)] *= inv;
            Q = jet_mul(Q, jet_pow(T, r + 1));
        }
        double om0 = 1.0 - Q[0];
        if (om0 == 0.0) {
            w_zero = true;
        } else {
            double lg = std::abs(Q[0]) < 0.5 ? std::log1p(-Q[0]) : std::log(std::abs(om0));
            slog += (r + 1) * lg;
            if (om0 < 0.0 && (r + 1) % 2 == 1) sign = -sign;
        }
        Jet om = Q;
        om[0] = om0;
        for (int v = 1; v <= nu; ++v) om[static_cast<std::size_t>(v)] = -Q[static_cast<std::size_t>(v)];
        prod = jet_mul(prod, jet_pow(om, r + 1));
    }
    Jet out = prod;
    for (int v = 1; v <= nu; ++v) out[static_cast<std::size_t>(v)] = -prod[static_cast<std::size_t>(v)];
    out[0] = centered_from_log(slog, sign, w_zero, c);
    return out;
}

std::vector<double> StepApproximant::values_on_lobatto(std::size_t N) const {
    std::vector<double> Av = cheb_vals_from_coeffs(A->coeffs(), N);
    std::vector<double> out(N + 1);
    if (kind == Kind::step) {
        double inv = 1.0 / (Ab - Aa);
        for (std::size_t g = 0; g <= N; ++g) out[g] = (Av[g] - Aa) * inv;
        return out;
    }
    std::vector<double> inv_den(a_anchors.size() * b_anchors.size());
    for (std::size_t kk = 0; kk < b_anchors.size(); ++kk)
        for (std::size_t ii = 0; ii < a_anchors.size(); ++ii)
            inv_den[kk * a_anchors.size() + ii] = 1.0 / (Ab_vals[kk] - Aa_vals[ii]);
    for (std::size_t g = 0; g <= N; ++g) {
        double prod = 1.0;
        for (std::size_t kk = 0; kk < b_anchors.size(); ++kk) {
            double Q = 1.0;
            for (std::size_t ii = 0; ii < a_anchors.size(); ++ii) {
                double T = (Av[g] - Aa_vals[ii]) * inv_den[kk * a_anchors.size() + ii];
                double Tp = 1.0;
                for (int e = 0; e <= r; ++e) Tp *= T;
                Q *= Tp;
            }
            double om = 1.0 - Q;
            double omp = 1.0;
            for (int e = 0; e <= r; ++e) omp *= om;
            prod *= omp;
        }
        out[g] = 1.0 - prod;
    }
    return out;
}

std::vector<double> StepApproximant::values_on_lobatto_centered(std::size_t N,
                                                                double node) const {
    std::vector<double> Av = cheb_vals_from_coeffs(A->coeffs(), N);
    auto pts = cheb_lobatto_points(N);
    std::vector<double> out(N + 1);
    if (kind == Kind::step) {
        double inv = 1.0 / (Ab - Aa);
        for (std::size_t g = 0; g <= N; ++g)
            out[g] = (Av[g] - Aa) * inv - (pts[g] >= node ? 1.0 : 0.0);
        return out;
    }
    std::vector<double> inv_den(a_anchors.size() * b_anchors.size());
    for (std::size_t kk = 0; kk < b_anchors.size(); ++kk)
        for (std::size_t ii = 0; ii < a_anchors.size(); ++ii)
            inv_den[kk * a_anchors.size() + ii] = 1.0 / (Ab_vals[kk] - Aa_vals[ii]);
    for (std::size_t g = 0; g <= N; ++g) {
        double slog = 0.0;
        int sign = 1;
        bool w_zero = false;
        for (std::size_t kk = 0; kk < b_anchors.size(); ++kk) {
            double Q = 1.0;
            for (std::size_t ii = 0; ii < a_anchors.size(); ++ii) {
                double T = (Av[g] - Aa_vals[ii]) * inv_den[kk * a_anchors.size() + ii];
                double Tp = 1.0;
                for (int e = 0; e <= r; ++e) Tp *= T;
                Q *= Tp;
            }
            double om = 1.0 - Q;
            if (om == 0.0) {
                w_zero = true;
            } else {
                double lg = std::abs(Q) < 0.5 ? std::log1p(-Q) : std::log(std::abs(om));
                slog += (r + 1) * lg;
                if (om < 0.0 && (r + 1) % 2 == 1) sign = -sign;
            }
        }
        out[g] = centered_from_log(slog, sign, w_zero, pts[g] >= node ? 1.0 : 0.0);
    }
    return out;
}

// ---- builders ---------------------------------------------------------------

StepApproximant build_step_poly(int n, int j, double a, double b, int mu) {
    if (n < 2 || j < 1 || j > n - 1)
        throw std::invalid_argument("build_step_poly: need 1 <= j <= n-1");
    ChebPartition part(n);
    if (!(-1.0 <= a && a <= part.node(j + 1)) || !(part.node(j - 1) <= b && b <= 1.0))
        throw std::invalid_argument("build_step_poly: infeasible anchors");
    if (mu < 1) mu = 2;
    StepApproximant T;
    T.kind = StepApproximant::Kind::step;
    T.n = T.n_orig = n;
    T.j = T.j_orig = j;
    T.mu = mu;
    T.A = kernel_antiderivative(n, j, kernel_power(mu));
    T.a = a;
    T.b = b;
    T.Aa = T.A->eval(a);
    T.Ab = T.A->eval(b);
    return T;
}

StepApproximant build_R_j(int n, int j, const NodeMultiset& Y, int r, int mu) {
    if (n < 2 || j < 1 || j > n - 1)
        throw std::invalid_argument("build_R_j: need 1 <= j <= n-1");
    if (r < 0) throw std::invalid_argument("build_R_j: negative r");
    if (mu < 1) mu = r + 2;
    ChebPartition part(n);

    NodeMultiset Yx = Y.empty() ? NodeMultiset({-1.0, 1.0}, {r + 1, r + 1})
                                : Y.with_node(-1.0, r + 1).with_node(1.0, r + 1);

    if (node_strictly_inside(Yx, part.node(j + 1), part.node(j)))
        throw std::invalid_argument(
            "build_R_j: Y point strictly inside (x_{j+1}, x_j); reduction impossible");

    int n_eff = n, j_eff = j;
    if (node_strictly_inside(Yx, part.node(j + 1), part.node(j - 1))) {
        n_eff = 2 * n;          // doubling reduction; the offending node moves
        j_eff = 2 * j + 1;      // to the B side of the finer partition
    }
    ChebPartition eff(n_eff);
    double lo = eff.node(j_eff + 1), hi = eff.node(j_eff - 1);

    StepApproximant R;
    R.kind = StepApproximant::Kind::blend;
    R.n = n_eff;
    R.j = j_eff;
    R.n_orig = n;
    R.j_orig = j;
    R.r = r;
    R.mu = mu;
    for (double z : Yx.distinct()) {
        if (z <= lo) R.a_anchors.push_back(z);
        else if (z >= hi) R.b_anchors.push_back(z);
        else
            throw std::invalid_argument("build_R_j: node not covered by the anchor split");
    }
    if (R.a_anchors.empty() || R.b_anchors.empty())
        throw std::invalid_argument("build_R_j: empty anchor side");
    R.A = kernel_antiderivative(n_eff, j_eff, kernel_power(mu));
    for (double z : R.a_anchors) R.Aa_vals.push_back(R.A->eval(z));
    for (double z : R.b_anchors) R.Ab_vals.push_back(R.A->eval(z));
    return R;
}

// ---- build_S ----------------------------------------------------------------

namespace {

bool interval_has_node(const ChebPartition& part, const NodeMultiset& Y, int i, bool open) {
    double lo = part.node(i), hi = part.node(i - 1);
    for (double z : Y.distinct()) {
        if (open ? (lo < z && z < hi) : (lo <= z && z <= hi)) return true;
    }
    return false;
}

LocalPoly least_squares_piece(const FunctionModel& f, Interval J, int deg) {
    std::size_t npts = 3 * static_cast<std::size_t>(deg + 1) + 4;
    auto xi = cheb_lobatto_points(npts - 1);
    Eigen::MatrixXd M(static_cast<long>(npts), deg + 1);
    Eigen::VectorXd rhs(static_cast<long>(npts));
    for (std::size_t t = 0; t < npts; ++t) {
        double u = xi[t];
        double x = J.mid() + 0.5 * J.length() * u;
        rhs[static_cast<long>(t)] = f(x);
        double tm2 = 1.0, tm1 = u;
        for (int l = 0; l <= deg; ++l) {
            double Tl = (l == 0) ? 1.0 : (l == 1 ? u : 2.0 * u * tm1 - tm2);
            if (l >= 2) {
                tm2 = tm1;
                tm1 = Tl;
            }
            M(static_cast<long>(t), l) = Tl;
        }
    }
    Eigen::VectorXd c = M.householderQr().solve(rhs);
    std::vector<double> coeffs(static_cast<std::size_t>(deg) + 1);
    for (int l = 0; l <= deg; ++l) coeffs[static_cast<std::size_t>(l)] = c[l];
    LocalPoly lp;
    lp.q = ChebPoly(std::move(coeffs));
    lp.center = J.mid();
    lp.halfwidth = 0.5 * J.length();
    return lp;
}

} // namespace

double PiecewiseS::eval(double x) const {
    ChebPartition part(n);
    return piece(part.locate(x)).eval(x);
}

std::vector<double> PiecewiseS::eval_jet(double x, int nu) const {
    ChebPartition part(n);
    return piece(part.locate(x)).eval_jet(x, nu);
}

PiecewiseS build_S(const FunctionModel& f, const NodeMultiset& Y, int k, int r, int n,
                   const BuildSOptions& opts) {
    if (k < 1 || r < 0 || n < 4) throw std::invalid_argument("build_S: need k >= 1, r >= 0, n >= 4");
    PiecewiseS S;
    S.n = n;
    S.k = k;
    S.r = r;
    S.k_eff = std::max(k, Y.total() - r);
    S.Y = Y;

    double lambda = Y.lambda_r(r);
    S.proof_bound_n = std::isfinite(lambda) ? 50.0 * (r + 1) / lambda : 0.0;
    S.below_proof_bound = n < S.proof_bound_n;
    if (S.below_proof_bound && opts.enforce_proof_bound)
        throw std::invalid_argument("build_S: n below the proof threshold " +
                                    std::to_string(S.proof_bound_n));

    ChebPartition part(n);

    // interpolation neighborhoods: grow until (a) the flanking intervals are
    // node-free (or the end of [-1,1] is reached) and (b) the outermost member
    // intervals have node-free open interiors, so every jump gap is node-free
    std::vector<std::pair<int, int>> ranges;
    for (double z : Y.distinct()) {
        int ilo = part.locate(z);
        int ihi = ilo;
        if (z == part.node(ilo) && ilo < n) ihi = ilo + 1;
        bool changed = true;
        while (changed) {
            changed = false;
            if (ilo > 1 && interval_has_node(part, Y, ilo - 1, false)) { --ilo; changed = true; }
            if (ihi < n && interval_has_node(part, Y, ihi + 1, false)) { ++ihi; changed = true; }
            if (ilo > 1 && interval_has_node(part, Y, ilo, true)) { --ilo; changed = true; }
            if (ihi < n && interval_has_node(part, Y, ihi, true)) { ++ihi; changed = true; }
        }
        ranges.emplace_back(ilo, ihi);
    }
    // merge index-overlapping ranges
    std::sort(ranges.begin(), ranges.end());
    std::vector<std::pair<int, int>> merged;
    for (auto rg : ranges) {
        if (!merged.empty() && rg.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, rg.second);
        else
            merged.push_back(rg);
    }

    std::vector<int> owner(static_cast<std::size_t>(n), -1);   // interval i -> neighborhood
    for (auto [ilo, ihi] : merged) {
        Interval span{part.node(ihi), part.node(ilo - 1)};
        NodeMultiset inside = Y.restricted(span);
        S.neighborhoods.push_back({ilo, ihi, span, inside.total()});
        for (int i = ilo; i <= ihi; ++i)
            owner[static_cast<std::size_t>(i - 1)] = static_cast<int>(S.neighborhoods.size()) - 1;
    }

    // pieces: one Hermite polynomial per neighborhood, Whitney least-squares
    // fits elsewhere
    S.piece_index.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> hood_poly(S.neighborhoods.size(), -1);
    for (int i = 1; i <= n; ++i) {
        int h = owner[static_cast<std::size_t>(i - 1)];
        if (h >= 0) {
            if (hood_poly[static_cast<std::size_t>(h)] < 0) {
                const auto& nb = S.neighborhoods[static_cast<std::size_t>(h)];
                WhitneyLocal wl = whitney_local(f, Y, S.k_eff, r, nb.span);
                LocalPoly lp;
                lp.center = nb.span.mid();
                lp.halfwidth = 0.5 * nb.span.length();
                lp.newton = std::move(wl.L);
                S.polys.push_back(std::move(lp));
                hood_poly[static_cast<std::size_t>(h)] = static_cast<int>(S.polys.size()) - 1;
            }
            S.piece_index[static_cast<std::size_t>(i - 1)] = hood_poly[static_cast<std::size_t>(h)];
        } else {
            S.polys.push_back(least_squares_piece(f, part.interval(i), S.k_eff + r - 1));
            S.piece_index[static_cast<std::size_t>(i - 1)] = static_cast<int>(S.polys.size()) - 1;
        }
    }

    // jump set: partition nodes not interior to any neighborhood
    for (int i = 1; i <= n - 1; ++i) {
        bool interior = false;
        for (auto [ilo, ihi] : merged)
            if (ilo <= i && i <= ihi - 1) { interior = true; break; }
        if (!interior) S.lambda_set.push_back(i);
    }
    return S;
}

// ---- assemble ----------------------------------------------------------------

AssembledPoly assemble_Pn(const PiecewiseS& S, int mu) {
    int mu_eff = mu > 0 ? mu : S.k_eff + S.r + 1;
    AssembledPoly out;
    out.S = S;
    out.mu = mu_eff;

    for (int i : S.lambda_set)
        out.blends.emplace_back(i, build_R_j(S.n, i, S.Y, S.r, mu_eff));

    int max_deg = S.k_eff + S.r - 1;
    for (auto& [i, b] : out.blends)
        max_deg = std::max(max_deg, b.degree() + S.k_eff + S.r - 1);
    std::size_t N = 256;
    while (N < static_cast<std::size_t>(max_deg) + 2) N *= 2;

    // telescoped assembly around the piece containing each grid point: every
    // blend contributes jump * (R - indicator), a product of a possibly huge
    // extrapolated jump with an exponentially small factor, which is stable;
    // the naive p_n + sum jump * R form loses ~eps * sum|terms| to cancellation
    auto pts = cheb_lobatto_points(N);
    ChebPartition part(S.n);
    std::vector<std::vector<double>> Rc;
    Rc.reserve(out.blends.size());
    for (auto& [i, blend] : out.blends)
        Rc.push_back(blend.values_on_lobatto_centered(N, part.node(i)));

    std::vector<double> vals(N + 1);
    for (std::size_t g = 0; g <= N; ++g) {
        int base = S.n;
        for (auto& [i, blend] : out.blends)
            if (pts[g] >= part.node(i)) { base = i; break; }
        double v = S.piece(base).eval(pts[g]);
        for (std::size_t bi = 0; bi < out.blends.size(); ++bi) {
            int i = out.blends[bi].first;
            v += (S.piece(i).eval(pts[g]) - S.piece(i + 1).eval(pts[g])) * Rc[bi][g];
        }
        vals[g] = v;
    }
    out.flat = ChebPoly(cheb_coeffs_from_vals(vals));
    return out;
}

std::vector<double> AssembledPoly::eval_jet_structured(double x, int nu) const {
    ChebPartition part(S.n);
    int base = S.n;
    for (const auto& [i, blend] : blends)
        if (x >= part.node(i)) { base = i; break; }
    Jet acc = S.piece(base).eval_jet(x, nu);
    for (const auto& [i, blend] : blends) {
        Jet jump = S.piece(i).eval_jet(x, nu);
        Jet nextj = S.piece(i + 1).eval_jet(x, nu);
        for (std::size_t v = 0; v < jump.size(); ++v) jump[v] -= nextj[v];
        double c = x >= part.node(i) ? 1.0 : 0.0;
        Jet term = jet_mul(jump, blend.eval_jet_centered(x, nu, c));
        for (std::size_t v = 0; v < acc.size(); ++v) acc[v] += term[v];
    }
    return acc;
}

double AssembledPoly::eval_noise(double x, int nu) const {
    ChebPartition part(S.n);
    int base_i = S.n;
    for (const auto& [i, blend] : blends)
        if (x >= part.node(i)) { base_i = i; break; }
    Jet base = S.piece(base_i).eval_jet(x, nu);
    double acc = std::abs(base[static_cast<std::size_t>(nu)]);
    for (const auto& [i, blend] : blends) {
        Jet a = S.piece(i).eval_jet(x, nu);
        Jet b = S.piece(i + 1).eval_jet(x, nu);
        Jet R = blend.eval_jet_centered(x, nu, x >= part.node(i) ? 1.0 : 0.0);
        double binom = 1.0;
        for (int m = 0; m <= nu; ++m) {
            std::size_t mi = static_cast<std::size_t>(m);
            std::size_t ri = static_cast<std::size_t>(nu - m);
            acc += binom * (std::abs(a[mi]) + std::abs(b[mi])) * std::abs(R[ri]);
            binom = binom * static_cast<double>(nu - m) / static_cast<double>(m + 1);
        }
    }
    return acc * std::numeric_limits<double>::epsilon();
}

InterpolationReport check_interpolation(const AssembledPoly& P, const FunctionModel& f) {
    InterpolationReport rep;
    const NodeMultiset& Y = P.S.Y;
    for (std::size_t i = 0; i < Y.distinct_count(); ++i) {
        double y = Y.z(i);
        int l = Y.mult(i);
        Jet jet = P.eval_jet_structured(y, l - 1);
        for (int v = 0; v < l; ++v) {
            double want = f.deriv(v, y);
            double resid = std::abs(jet[static_cast<std::size_t>(v)] - want);
            rep.max_abs_resid = std::max(rep.max_abs_resid, resid);
            rep.max_rel_resid = std::max(rep.max_rel_resid, resid / std::max(1.0, std::abs(want)));
        }
    }
    return rep;
}

// ---- constrained minimax -------------------------------------------------------

MinimaxResult constrained_minimax(const FunctionModel& f, const NodeMultiset& Y, int n,
                                  const RealFn& w, const EvalGrid& grid) {
    int s = Y.total();
    if (s > n + 1) throw std::invalid_argument("constrained_minimax: more constraints than coefficients");
    std::size_t m = grid.size();
    if (m < static_cast<std::size_t>(n + 2))
        throw std::invalid_argument("constrained_minimax: grid too small");

    NewtonForm L;
    std::vector<double> ynodes;
    if (s > 0) {
        L = hermite_interpolant(f, Y);
        ynodes = L.nodes;
    }
    auto L_eval = [&](double x) { return s > 0 ? L.eval(x) : 0.0; };
    auto Omega = [&](double x) {
        double p = 1.0;
        for (double y : ynodes) p *= (x - y);
        return p;
    };

    int q = n - s + 1;   // free Chebyshev coefficients of the Q factor
    MinimaxResult res;
    if (q <= 0) {        // fully determined by the constraints
        res.P = L.to_cheb();
        for (double x : grid)
            res.objective = std::max(res.objective, std::abs(f(x) - res.P.eval(x)) / w(x));
        res.converged = true;
        return res;
    }

    std::vector<double> g(m), om(m), wv(m);
    std::vector<std::vector<double>> T(m, std::vector<double>(static_cast<std::size_t>(q)));
    for (std::size_t i = 0; i < m; ++i) {
        double x = grid[i];
        g[i] = f(x) - L_eval(x);
        om[i] = Omega(x);
        wv[i] = w(x);
        if (!(wv[i] > 0.0)) throw std::invalid_argument("constrained_minimax: weight must be positive");
        double tm2 = 1.0, tm1 = x;
        for (int l = 0; l < q; ++l) {
            double Tl = (l == 0) ? 1.0 : (l == 1 ? x : 2.0 * x * tm1 - tm2);
            if (l >= 2) { tm2 = tm1; tm1 = Tl; }
            T[i][static_cast<std::size_t>(l)] = Tl;
        }
    }

    std::vector<double> lawson(m, 1.0 / static_cast<double>(m));
    Eigen::VectorXd c = Eigen::VectorXd::Zero(q);
    double prev_e = -1.0;
    int it = 0;
    bool converged = false;
    for (; it < 200; ++it) {
        Eigen::MatrixXd M(static_cast<long>(m), q);
        Eigen::VectorXd rhs(static_cast<long>(m));
        for (std::size_t i = 0; i < m; ++i) {
            double sc = std::sqrt(lawson[i]) / wv[i];
            for (int l = 0; l < q; ++l)
                M(static_cast<long>(i), l) = sc * om[i] * T[i][static_cast<std::size_t>(l)];
            rhs[static_cast<long>(i)] = sc * g[i];
        }
        c = M.householderQr().solve(rhs);
        double e = 0.0;
        std::vector<double> r(m);
        for (std::size_t i = 0; i < m; ++i) {
            double qx = 0.0;
            for (int l = 0; l < q; ++l) qx += c[l] * T[i][static_cast<std::size_t>(l)];
            r[i] = (g[i] - om[i] * qx) / wv[i];
            e = std::max(e, std::abs(r[i]));
        }
        if (prev_e >= 0.0 && std::abs(e - prev_e) <= 1e-8 * std::max(e, 1e-300)) {
            prev_e = e;
            converged = true;
            break;
        }
        prev_e = e;
        double total = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            lawson[i] = std::max(lawson[i] * std::abs(r[i]), 1e-300);
            total += lawson[i];
        }
        for (std::size_t i = 0; i < m; ++i) lawson[i] /= total;
    }

    ChebPoly Q(std::vector<double>(c.data(), c.data() + q));
    ChebPoly Om = ChebPoly::constant(1.0);
    for (double y : ynodes) Om = Om * (ChebPoly::identity() - ChebPoly::constant(y));
    res.P = Om * Q;
    if (s > 0) res.P += L.to_cheb();
    res.objective = prev_e;
    res.iterations = it + 1;
    res.converged = converged;
    return res;
}

ChebPoly boolean_sum_endpoint(const FunctionModel& f, const ChebPoly& P) {
    double g1 = f(1.0) - P.eval(1.0);
    double gm1 = f(-1.0) - P.eval(-1.0);
    ChebPoly corr({0.5 * (g1 + gm1), 0.5 * (g1 - gm1)});
    return P + corr;
}

} // namespace approx
