#include "approx/smoothness.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

namespace approx {

double finite_difference(const RealFn& f, int k, double u, double x, Interval J) {
    if (k < 1) throw std::invalid_argument("finite_difference: k must be >= 1");
    if (u <= 0.0) throw std::invalid_argument("finite_difference: u must be positive");
    double half = 0.5 * k * u;
    if (x - half < J.a || x + half > J.b) return 0.0;
    double acc = 0.0;
    double binom = 1.0;   // C(k, i)
    for (int i = 0; i <= k; ++i) {
        double sign = (i % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binom * f(x + (0.5 * k - i) * u);
        binom = binom * (k - i) / (i + 1);
    }
    return acc;
}

double omega_k(const RealFn& f, int k, double t, Interval J, const EvalGrid& xgrid,
               int u_count) {
    if (t <= 0.0) return 0.0;
    double sup = 0.0;
    for (int i = 0; i < u_count; ++i) {
        double u = t * std::exp2(-static_cast<double>(i) / 8.0);
        for (double x : xgrid)
            sup = std::max(sup, std::abs(finite_difference(f, k, u, x, J)));
    }
    return sup;
}

ModulusProfile::ModulusProfile(std::vector<double> ts, std::vector<double> ws, int k, Interval J)
    : ts_(std::move(ts)), ws_(std::move(ws)), k_(k), J_(J) {
    if (ts_.size() != ws_.size() || ts_.size() < 2)
        throw std::invalid_argument("ModulusProfile: need matching grids with >= 2 samples");
    for (std::size_t i = 1; i < ts_.size(); ++i) {
        if (ts_[i] <= ts_[i - 1])
            throw std::invalid_argument("ModulusProfile: t grid must be strictly increasing");
        ws_[i] = std::max(ws_[i], ws_[i - 1]);   // a modulus is nondecreasing
    }
}

ModulusProfile ModulusProfile::build(const RealFn& f, int k, Interval J, const EvalGrid& xgrid,
                                     const std::vector<double>& ts, int u_count) {
    std::vector<double> ws(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        ws[i] = omega_k(f, k, ts[i], J, xgrid, u_count);
    return ModulusProfile(ts, std::move(ws), k, J);
}

double ModulusProfile::eval(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= ts_.back()) return ws_.back();
    if (t <= ts_.front()) {
        if (ws_.front() <= 0.0) return 0.0;
        // extrapolate with the power fitted on the lowest samples, clamped
        // to [0, k] (no modulus decays faster than t^k)
        double slope = static_cast<double>(k_);
        for (std::size_t i = 1; i < ts_.size(); ++i) {
            if (ws_[i] > ws_.front()) {
                slope = std::log(ws_[i] / ws_.front()) / std::log(ts_[i] / ts_.front());
                break;
            }
        }
        slope = std::clamp(slope, 0.0, static_cast<double>(k_));
        return ws_.front() * std::pow(t / ts_.front(), slope);
    }
    auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - ts_.begin());   // ts_[i-1] <= t < ts_[i]
    double w0 = ws_[i - 1], w1 = ws_[i];
    if (w0 <= 0.0 || w1 <= 0.0) {
        double s = (t - ts_[i - 1]) / (ts_[i] - ts_[i - 1]);
        return w0 + s * (w1 - w0);
    }
    double s = std::log(t / ts_[i - 1]) / std::log(ts_[i] / ts_[i - 1]);
    return w0 * std::pow(w1 / w0, s);
}

MajorantCheck check_majorant_class(const RealFn& phi, double alpha, double M,
                                   const std::vector<double>& tgrid) {
    std::vector<double> v(tgrid.size());
    for (std::size_t i = 0; i < tgrid.size(); ++i) v[i] = phi(tgrid[i]);
    for (std::size_t i = 0; i < tgrid.size(); ++i) {
        for (std::size_t j = i + 1; j < tgrid.size(); ++j) {
            double t1 = tgrid[i], t2 = tgrid[j];
            if (v[i] > M * v[j] * (1.0 + 1e-12))
                return {false, t1, t2, MajorantCheck::Kind::not_nondecreasing};
            double r1 = v[i] / std::pow(t1, alpha);
            double r2 = v[j] / std::pow(t2, alpha);
            if (r2 > M * r1 * (1.0 + 1e-12))
                return {false, t1, t2, MajorantCheck::Kind::ratio_increasing};
        }
    }
    return {};
}

StechkinResult stechkin_regularize(const std::vector<double>& ts, const std::vector<double>& ws,
                                   double alpha, double M) {
    if (ts.size() != ws.size() || ts.size() < 2)
        throw std::invalid_argument("stechkin_regularize: need matching grids with >= 2 samples");
    std::size_t n = ts.size();
    for (std::size_t i = 1; i < n; ++i)
        if (ts[i] <= ts[i - 1])
            throw std::invalid_argument("stechkin_regularize: t grid must be strictly increasing");

    // membership in the relaxed class is a precondition, not a repair target
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (ws[i] > M * ws[j] * (1.0 + 1e-12))
                throw std::invalid_argument(
                    "stechkin_regularize: input not nondecreasing up to M at t = (" +
                    std::to_string(ts[i]) + ", " + std::to_string(ts[j]) + ")");
            double r1 = ws[i] / std::pow(ts[i], alpha);
            double r2 = ws[j] / std::pow(ts[j], alpha);
            if (r2 > M * r1 * (1.0 + 1e-12))
                throw std::invalid_argument(
                    "stechkin_regularize: t^-alpha ratio increases beyond M at t = (" +
                    std::to_string(ts[i]) + ", " + std::to_string(ts[j]) + ")");
        }
    }

    StechkinResult out;
    out.t = ts;
    out.w_tilde.resize(n);
    double run = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        run = std::max(run, ws[i]);
        out.w_tilde[i] = run;
    }
    out.w_reg.resize(n);
    double suffix = 0.0;   // sup_{u >= t} w_tilde(u)/u^alpha
    for (std::size_t i = n; i-- > 0;) {
        suffix = std::max(suffix, out.w_tilde[i] / std::pow(ts[i], alpha));
        out.w_reg[i] = std::pow(ts[i], alpha) * suffix;
    }
    return out;
}

// ---- pathological majorant ----------------------------------------------

PathologicalPhi::PathologicalPhi(double alpha, int depth) : alpha_(alpha), depth_(depth) {
    if (!(alpha > 0.0)) throw std::invalid_argument("PathologicalPhi: alpha must be positive");
    if (depth < 0) throw std::invalid_argument("PathologicalPhi: negative depth");
    constexpr double kLnMin = -708.0;   // below this exp() underflows to 0

    ln_t_.push_back(std::log(0.5));
    ln_phi_.push_back(0.5 * alpha * std::log(0.5));

    int j = 0;
    while (static_cast<int>(ln_t_.size()) - 1 < depth) {
        double ln_phi_2j = ln_phi_[static_cast<std::size_t>(2 * j)];
        if (-ln_phi_2j > 700.0)
            throw std::domain_error("PathologicalPhi: depth too large, breakpoint underflows; "
                                    "last valid index j = " +
                                    std::to_string(static_cast<int>(ln_t_.size()) - 1));
        double lt_odd = (2.0 - 2.0 * std::exp(-ln_phi_2j)) / alpha;
        if (lt_odd < kLnMin)
            throw std::domain_error("PathologicalPhi: depth too large, t_j underflows; "
                                    "last valid index j = " +
                                    std::to_string(static_cast<int>(ln_t_.size()) - 1));
        ln_t_.push_back(lt_odd);
        ln_phi_.push_back(ln_phi_2j);
        double ln_lam = ln_phi_2j - alpha * lt_odd;
        ln_lambda_.push_back(ln_lam);
        if (static_cast<int>(ln_t_.size()) - 1 == depth) break;

        double lt_even = -(static_cast<double>(j) + 2.0) * ln_lam / alpha;
        if (lt_even < kLnMin)
            throw std::domain_error("PathologicalPhi: depth too large, t_j underflows; "
                                    "last valid index j = " +
                                    std::to_string(static_cast<int>(ln_t_.size()) - 1));
        ln_t_.push_back(lt_even);
        ln_phi_.push_back(ln_lam + alpha * lt_even);
        ++j;
    }
}

double PathologicalPhi::eval(double t) const {
    if (!(t > 0.0)) throw std::domain_error("PathologicalPhi::eval: t must be positive");
    double lt = std::log(t);
    if (lt > ln_t_.front() + 1e-12)
        throw std::domain_error("PathologicalPhi::eval: t above t_0");
    if (lt < ln_t_.back())
        throw std::domain_error("PathologicalPhi::eval: t below the built range");
    // segments, from the top: [t_1, t_0] const, [t_2, t_1] power, ...
    for (std::size_t m = 1; m < ln_t_.size(); ++m) {
        if (lt >= ln_t_[m]) {
            if (m % 2 == 1)   // [t_{2j+1}, t_{2j}] : constant phi_{2j}
                return std::exp(ln_phi_[m - 1]);
            std::size_t j = m / 2 - 1;   // [t_{2j+2}, t_{2j+1}] : lambda_j t^alpha
            return std::exp(ln_lambda_[j] + alpha_ * lt);
        }
    }
    return std::exp(ln_phi_.back());
}

MajorantCheck PathologicalPhi::scan_non_membership(double beta, double M) const {
    double lnM = std::log(M);
    int top = (depth_ % 2 == 0) ? depth_ / 2 : (depth_ - 1) / 2;
    for (int j0 = 0; j0 <= top; ++j0) {
        for (int j = j0 + 1; j <= top; ++j) {
            // t_{2j} < t_{2j0}; violation when t^{-beta} phi drops by more than M
            double g_small = ln_phi(2 * j) - beta * ln_t(2 * j);
            double g_large = ln_phi(2 * j0) - beta * ln_t(2 * j0);
            if (g_small < g_large - lnM)
                return {false, t(2 * j), t(2 * j0), MajorantCheck::Kind::ratio_increasing};
        }
    }
    return {};
}

std::vector<MarchaudRow> marchaud_check(const RealFn& f, int k, Interval J,
                                        const std::vector<double>& ts, const EvalGrid& xgrid) {
    double len = J.length();
    double sup_f = 0.0;
    for (double x : xgrid) sup_f = std::max(sup_f, std::abs(f(x)));

    double t_min = *std::min_element(ts.begin(), ts.end());
    std::vector<double> ugrid;
    for (std::size_t i = 0; i < 160; ++i)
        ugrid.push_back(t_min * std::pow(len / t_min, static_cast<double>(i) / 159.0));
    ModulusProfile prof = ModulusProfile::build(f, k, J, xgrid, ugrid);

    std::vector<MarchaudRow> rows;
    for (double t : ts) {
        double lhs = omega_k(f, 1, t, J, xgrid);
        // integral in v = ln u of omega_k(e^v) e^{-v}, trapezoid on 200 panels
        double integral = 0.0;
        std::size_t m = 200;
        double v0 = std::log(t), v1 = std::log(len);
        double hstep = (v1 - v0) / static_cast<double>(m);
        auto g = [&](double v) { return prof.eval(std::exp(v)) * std::exp(-v); };
        double prev = g(v0);
        for (std::size_t i = 1; i <= m; ++i) {
            double cur = g(v0 + hstep * static_cast<double>(i));
            integral += 0.5 * hstep * (prev + cur);
            prev = cur;
        }
        double rhs = t * (integral + sup_f / len);
        rows.push_back({t, lhs, rhs, rhs > 0.0 ? lhs / rhs : 0.0});
    }
    return rows;
}

} // namespace approx
