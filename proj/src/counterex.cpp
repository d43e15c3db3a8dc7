#include "approx/counterex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "approx/verify.hpp"

namespace approx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---- small Gauss-Legendre rule (nodes via Newton on P_n) -------------------

struct GaussRule {
    std::vector<double> x, w;   // on [-1,1]
};

const GaussRule& gauss24() {
    static const GaussRule rule = [] {
        constexpr int n = 24;
        GaussRule g;
        g.x.resize(n);
        g.w.resize(n);
        for (int i = 0; i < n; ++i) {
            double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int j = 2; j <= n; ++j) {
                    double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            g.x[static_cast<std::size_t>(i)] = t;
            g.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
        return g;
    }();
    return rule;
}

// integral of fn over [a,b], panel chunks of width at most `chunk`
double gauss_integrate(const RealFn& fn, double a, double b, double chunk = 2.0) {
    if (b <= a) return 0.0;
    const GaussRule& g = gauss24();
    int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / chunk)));
    double total = 0.0;
    for (int p = 0; p < pieces; ++p) {
        double lo = a + (b - a) * p / pieces;
        double hi = a + (b - a) * (p + 1) / pieces;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (std::size_t i = 0; i < g.x.size(); ++i)
            acc += g.w[i] * fn(mid + half * g.x[i]);
        total += half * acc;
    }
    return total;
}

// ---- (x - z)_+^p * (A cos(2 pi ln(x-z)) + B sin(...)) ----------------------

double osc_deriv(int p0, double A0, double B0, int nu, double t) {
    // t = x - z > 0; differentiate nu times via the exact recurrence
    double A = A0, B = B0;
    int p = p0;
    for (int i = 0; i < nu; ++i) {
        double An = p * A + kTwoPi * B;
        double Bn = p * B - kTwoPi * A;
        A = An;
        B = Bn;
        --p;
    }
    double lt = std::log(t);
    return std::pow(t, p) * (A * std::cos(kTwoPi * lt) + B * std::sin(kTwoPi * lt));
}

double falling_factorial(int p, int nu) {
    double v = 1.0;
    for (int i = 0; i < nu; ++i) v *= (p - i);
    return v;
}

// ---- epsilon mini-family, solved in log space -------------------------------

// ln of eps(x) at ln x, raised to the power q
double ln_eps(EpsKind kind, int k, double q, double lx) {
    switch (kind) {
        case EpsKind::inv_log: return q * -std::log(-lx);
        case EpsKind::power: return q * lx / (2.0 * k);
    }
    return 0.0;
}

// solve eps(x)^q = T in log space; returns ln x (may be -inf on underflow)
double ln_eps_inverse(EpsKind kind, int k, double q, double lnT) {
    switch (kind) {
        case EpsKind::inv_log: return -std::exp(-lnT / q);
        case EpsKind::power: return 2.0 * k * lnT / q;
    }
    return 0.0;
}

} // namespace

// ---- oscillating power function (sharp for the derivative-sup classes) -----

NegativeInstance build_case_i(int r) {
    if (r < 0) throw std::invalid_argument("build_case_i: r >= 0 required");
    int p = r + 1;
    FunctionModel F(
        "case_i(r=" + std::to_string(r) + ")", Interval{0.0, 1.0}, r + 1,
        [p](int nu, double x) { return x > 0.0 ? osc_deriv(p, 1.0, 0.0, nu, x) : 0.0; });
    NegativeInstance inst{NegativeCase::case_i, 1, r, std::move(F)};
    inst.epsilon_hat = [](double x) { return 1.0 / std::abs(std::log(x)); };
    for (int m = 1; m <= 34; ++m) inst.probes.push_back(std::exp(-static_cast<double>(m)));
    return inst;
}

// ---- the oscillating-modulus staircase --------------------------------------

namespace {

NegativeInstance build_staircase(int k, int r, EpsKind eps, double eps_pow, int depth) {
    if (k < 2 || k < r + 1)
        throw std::invalid_argument("build_staircase: need k >= max(2, r+1)");
    if (depth < 1) throw std::invalid_argument("build_staircase: depth >= 1");

    std::vector<double> ln_x{0.0};
    std::vector<double> ln_xhat;
    bool ordering_ok = true;
    bool truncated = false;
    const double kLnFloor = -4.4e15;   // past this the ledger itself degenerates

    // eps-hat = max(eps^q, 2 x^{1/k}); solve eps-hat(x) = T by picking the
    // branch that dominates at the candidate point
    auto solve_hat = [&](double lnT) {
        double le = ln_eps_inverse(eps, k, eps_pow, lnT);
        double lf = k * (lnT - std::numbers::ln2);
        if (!std::isfinite(le)) return le;
        double floor_at_le = std::numbers::ln2 + le / k;
        return floor_at_le <= lnT ? le : lf;
    };

    while (static_cast<int>(ln_x.size()) - 1 < depth) {
        std::size_t j2 = ln_x.size() - 1;               // index 2j
        double cand = solve_hat(ln_x[j2]);              // ln x_{2j+1}
        if (!std::isfinite(cand) || cand < kLnFloor) {
            truncated = true;
            break;
        }
        ln_x.push_back(cand);
        ln_xhat.push_back(cand + ln_x[j2]);             // eps-hat(x_{2j+1}) = x_{2j}
        if (cand > ln_x[j2] - std::numbers::ln2 + 1e-12) ordering_ok = false;
        if (ln_xhat.back() > cand + 1e-12) ordering_ok = false;
        if (static_cast<int>(ln_x.size()) - 1 == depth) break;

        double next = ln_x[j2] + k * cand;              // ln x_{2j+2}
        if (next < kLnFloor) {
            truncated = true;
            break;
        }
        ln_x.push_back(next);
        if (std::numbers::ln2 + next > ln_xhat.back() + 1e-12) ordering_ok = false;
    }

    // segment boundaries, descending: x_0, xh_1, x_2, xh_3, x_4, ...
    std::vector<double> bp{0.0};
    for (std::size_t j = 0; j < ln_xhat.size(); ++j) {
        bp.push_back(ln_xhat[j]);
        if (2 * j + 2 < ln_x.size()) bp.push_back(ln_x[2 * j + 2]);
    }

    auto lx_copy = ln_x;
    auto bp_copy = bp;
    int kk = k;
    RealFn omega = [lx_copy, bp_copy, kk](double x) -> double {
        if (x <= 0.0) return 0.0;
        double lx = std::min(std::log(x), 0.0);
        for (std::size_t i = 0; i + 1 < bp_copy.size(); i += 2) {
            // power stretch [xh_{2j+1}, x_{2j}]
            if (lx >= bp_copy[i + 1]) return std::exp((1.0 - kk) * lx_copy[i] + kk * lx);
            // constant stretch [x_{2j+2}, xh_{2j+1})
            if (i + 2 < bp_copy.size() && lx >= bp_copy[i + 2]) return std::exp(lx_copy[i + 2]);
        }
        // below the ledger: extend proportionally to x (keeps omega(x) <= x)
        std::size_t last = bp_copy.size() - 1;
        double lw = (last % 2 == 1) ? ((1.0 - kk) * lx_copy[last - 1] + kk * bp_copy[last])
                                    : lx_copy[last];
        return std::exp(lw + (lx - bp_copy[last]));
    };

    // representable breakpoints, used as quadrature panel boundaries
    std::vector<double> panels;
    for (double b : bp)
        if (b > -700.0) panels.push_back(b);

    RealFn f_core = [omega, panels, kk](double x) -> double {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 0.0;
        double lx = std::log(x);
        // (1/(k-2)!) int_x^1 x (u-x)^{k-2} omega(u) u^{-k} du in v = ln u
        std::vector<double> cuts{lx};
        for (double b : panels)
            if (b > lx && b < 0.0) cuts.push_back(b);
        cuts.push_back(0.0);
        std::sort(cuts.begin(), cuts.end());
        double fact = 1.0;
        for (int i = 2; i <= kk - 2; ++i) fact *= i;
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            RealFn g = [&](double v) {
                double u = std::exp(v);
                return x * std::pow(u - x, kk - 2) * omega(u) * std::exp((1.0 - kk) * v);
            };
            total += gauss_integrate(g, cuts[i], cuts[i + 1]);
        }
        return total / fact;
    };

    int rr = r;
    FunctionModel F(
        "staircase(k=" + std::to_string(k) + ",r=" + std::to_string(r) +
            ",eps=" + std::to_string(static_cast<int>(eps)) + "^" + std::to_string(eps_pow) +
            ",depth=" + std::to_string(depth) + ")",
        Interval{0.0, 1.0}, r, [f_core, panels, rr](int nu, double x) -> double {
            if (x <= 0.0) return 0.0;
            if (nu == rr) return f_core(x);
            // (1/(r-1-nu)!) int_0^x (x-t)^{r-1-nu} f(t) dt, panel-split
            int p = rr - 1 - nu;
            double fact = 1.0;
            for (int i = 2; i <= p; ++i) fact *= i;
            std::vector<double> cuts{0.0, x};
            for (double b : panels) {
                double t = std::exp(b);
                if (t < x) cuts.push_back(t);
            }
            std::sort(cuts.begin(), cuts.end());
            double total = 0.0;
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
                RealFn g = [&](double t) { return std::pow(x - t, p) * f_core(t); };
                total += gauss_integrate(g, cuts[i], cuts[i + 1], 0.25 * x + 1e-6);
            }
            return total / fact;
        });

    NegativeInstance inst{NegativeCase::case_ii, k, r, std::move(F)};
    inst.ln_x = ln_x;
    inst.ln_xhat = ln_xhat;
    inst.ln_omega_bp = bp;
    inst.omega = omega;
    inst.f_core = f_core;
    inst.ordering_ok = ordering_ok;
    inst.depth_truncated = truncated;
    inst.built_depth = static_cast<int>(ln_x.size()) - 1;
    EpsKind ek = eps;
    double q = eps_pow;
    inst.epsilon_hat = [ek, kk, q](double x) {
        double lx = std::log(x);
        return std::max(std::exp(ln_eps(ek, kk, q, lx)), 2.0 * std::pow(x, 1.0 / kk));
    };
    for (std::size_t i = 1; i < ln_x.size(); ++i)
        if (ln_x[i] > -700.0) inst.probes.push_back(std::exp(ln_x[i]));
    return inst;
}

} // namespace

NegativeInstance build_case_ii(int k, int r, EpsKind eps, int depth) {
    return build_staircase(k, r, eps, 1.0, depth);
}

NegativeInstance build_case_iii(int k, int r, EpsKind eps, int depth) {
    if (r < 1) throw std::invalid_argument("build_case_iii: r >= 1 required");
    if (k > r) throw std::invalid_argument("build_case_iii: k <= r required");
    NegativeInstance inst =
        build_staircase(r + 1, r, eps, static_cast<double>(k) / (r + 1), depth);
    inst.kind = NegativeCase::case_iii;
    inst.k = k;   // ratios are re-measured with the lower-order modulus
    return inst;
}

NegativeInstance build_weak(int k, int r, double epsilon) {
    if (k < 1 || r < 0 || epsilon <= 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("build_weak: need k >= 1, r >= 0, 0 < epsilon < 1");
    int p = k + r;
    FunctionModel F("weak(k=" + std::to_string(k) + ",r=" + std::to_string(r) +
                        ",eps=" + std::to_string(epsilon) + ")",
                    Interval{0.0, 1.0}, k + r - 1, [p, epsilon](int nu, double x) {
                        if (x >= epsilon) return 0.0;
                        double sign = (nu % 2 == 0) ? 1.0 : -1.0;
                        return sign * falling_factorial(p, nu) *
                               std::pow(epsilon - x, p - nu);
                    });
    NegativeInstance inst{NegativeCase::weak, k, r, std::move(F)};
    inst.weak_epsilon = epsilon;
    inst.epsilon_hat = [](double x) { return 1.0 / std::abs(std::log(x)); };
    for (int m = 1; m <= 30; ++m) inst.probes.push_back(epsilon * std::pow(2.0, -m));
    return inst;
}

NegativeInstance build_sobolev(int r, double z) {
    if (r < 1) throw std::invalid_argument("build_sobolev: r >= 1 required");
    FunctionModel F("sobolev(r=" + std::to_string(r) + ",z=" + std::to_string(z) + ")",
                    Interval{-1.0, 1.0}, r, [r, z](int nu, double x) {
                        double t = x - z;
                        return t > 0.0 ? osc_deriv(r, 1.0, 0.0, nu, t) : 0.0;
                    });
    NegativeInstance inst{NegativeCase::sobolev, 1, r, std::move(F)};
    inst.singular_point = z;
    inst.epsilon_hat = [](double) { return 1.0; };
    for (int m = 1; m <= 34; ++m) inst.probes.push_back(z + std::exp(-static_cast<double>(m)));
    return inst;
}

NegativeInstance build_lip(double alpha, double z) {
    if (alpha <= 0.0) throw std::invalid_argument("build_lip: alpha > 0 required");
    bool integer = std::abs(alpha - std::round(alpha)) < 1e-12;
    int r_max = static_cast<int>(std::ceil(alpha)) - 1;
    FunctionModel F =
        integer ? FunctionModel("lip(alpha=" + std::to_string(alpha) + ",z=" + std::to_string(z) + ")",
                                Interval{-1.0, 1.0}, r_max,
                                [p0 = static_cast<int>(std::round(alpha)), z](int nu, double x) {
                                    double t = x - z;
                                    if (t <= 0.0) return 0.0;
                                    // (x-z)^p ln(x-z): recurrence on x^p (A ln x + B)
                                    double A = 1.0, B = 0.0;
                                    int p = p0;
                                    for (int i = 0; i < nu; ++i) {
                                        double Bn = p * B + A;
                                        A = p * A;
                                        B = Bn;
                                        --p;
                                    }
                                    return std::pow(t, p) * (A * std::log(t) + B);
                                })
                : FunctionModel("lip(alpha=" + std::to_string(alpha) + ",z=" + std::to_string(z) + ")",
                                Interval{-1.0, 1.0}, r_max, [alpha, z](int nu, double x) {
                                    double t = x - z;
                                    if (t <= 0.0) return 0.0;
                                    double c = 1.0;
                                    for (int i = 0; i < nu; ++i) c *= (alpha - i);
                                    return c * std::pow(t, alpha - nu);
                                });
    NegativeInstance inst{NegativeCase::lip, 2, 0, std::move(F)};
    inst.singular_point = z;
    inst.epsilon_hat = [](double) { return 1.0; };
    for (int m = 1; m <= 34; ++m) inst.probes.push_back(z + std::exp(-static_cast<double>(m)));
    return inst;
}

// ---- fits and demos ----------------------------------------------------------

FitResult minimax_fit(const FunctionModel& f, int n, Interval fit_dom,
                      std::size_t grid_points) {
    double a = fit_dom.a, b = fit_dom.b;
    FunctionModel g("fit:" + f.label(), Interval{-1.0, 1.0}, 0,
                    [&f, a, b](int, double u) { return f(0.5 * (a + b) + 0.5 * (b - a) * u); });
    MinimaxResult res = constrained_minimax(g, NodeMultiset{}, n, [](double) { return 1.0; },
                                            EvalGrid::uniform(Interval{-1.0, 1.0}, grid_points));
    return {res.P, fit_dom, res.objective};
}

bool BlowupReport::nondecreasing(double slack) const {
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].ratio < rows[i - 1].ratio * (1.0 - slack)) return false;
    return true;
}

double BlowupReport::last_over_first() const {
    if (rows.empty() || rows.front().ratio <= 0.0) return 0.0;
    return rows.back().ratio / rows.front().ratio;
}

std::string BlowupReport::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "m,x,num,den,ratio\n";
    for (const auto& r : rows)
        out << r.m << ',' << r.x << ',' << r.num << ',' << r.den << ',' << r.ratio << '\n';
    return out.str();
}

BlowupReport blowup_demo(const NegativeInstance& inst, const FitResult& fit) {
    ModulusProfile prof = omega_profile(inst.F, inst.r, inst.k);
    BlowupReport rep;
    int m = 0;
    for (double x : inst.probes) {
        ++m;
        double off = std::abs(x - inst.singular_point);
        if (off <= 0.0) continue;
        double num = std::abs(inst.F(x) - fit.eval(x));
        double den = prof.eval(inst.epsilon_hat(off) *
                               std::pow(off, (inst.r + 1.0) / inst.k));
        if (!(den > 0.0)) continue;
        rep.rows.push_back({m, x, num, den, num / den});
    }

    // fit sign on the probe tail, and the induced lower bound when one-signed
    std::size_t half = rep.rows.size() / 2;
    bool pos = true, neg = true;
    for (std::size_t i = half; i < rep.rows.size(); ++i) {
        double v = fit.eval(rep.rows[i].x);
        pos = pos && v >= 0.0;
        neg = neg && v <= 0.0;
    }
    rep.one_signed_near_zero = pos || neg;
    if (rep.one_signed_near_zero) {
        double slack = std::numeric_limits<double>::infinity();
        for (std::size_t i = half; i < rep.rows.size(); ++i) {
            double fv = std::abs(inst.F(rep.rows[i].x));
            if (fv > 0.0) slack = std::min(slack, rep.rows[i].num / fv);
        }
        rep.sign_bound_slack = std::isfinite(slack) ? slack : 0.0;
    }

    // least-squares slope of ln(ratio) against m
    double sm = 0, sy = 0, smm = 0, smy = 0, cnt = 0;
    for (const auto& r : rep.rows) {
        if (r.ratio <= 0.0) continue;
        double y = std::log(r.ratio);
        sm += r.m;
        sy += y;
        smm += static_cast<double>(r.m) * r.m;
        smy += r.m * y;
        cnt += 1.0;
    }
    if (cnt >= 2.0 && cnt * smm - sm * sm > 0.0)
        rep.slope = (cnt * smy - sm * sy) / (cnt * smm - sm * sm);
    return rep;
}

BlowupReport blowup_demo(const NegativeInstance& inst, int fit_degree) {
    return blowup_demo(inst, minimax_fit(inst.F, fit_degree, inst.F.domain()));
}

WeakSweepResult weak_sweep(int k, int r, int n, double M, double delta, int max_j) {
    WeakSweepResult res;
    for (int j = 1; j <= max_j; ++j) {
        double eps = std::pow(2.0, -j);
        NegativeInstance inst = build_weak(k, r, eps);
        ModulusProfile prof = omega_profile(inst.F, r, k);
        RealFn den = [&prof, &inst, k, r](double x) {
            return std::max(prof.eval(inst.epsilon_hat(x) * std::pow(x, (r + 1.0) / k)),
                            1e-300);
        };
        EvalGrid grid = EvalGrid::log_spaced(1e-9, delta, 400)
                            .merged(EvalGrid::uniform(Interval{delta / 400.0, delta}, 400));
        // even the ratio-optimal fit cannot stay below M once eps is small
        MinimaxResult fit = constrained_minimax(inst.F, NodeMultiset{}, n, den, grid);
        res.rows.push_back({eps, fit.objective});
        if (fit.objective >= M) {
            res.found = true;
            res.eps_star = eps;
            res.ratio_at_star = fit.objective;
            NegativeInstance half = build_weak(k, r, 0.5 * eps);
            ModulusProfile prof2 = omega_profile(half.F, r, k);
            RealFn den2 = [&prof2, &half, k, r](double x) {
                return std::max(
                    prof2.eval(half.epsilon_hat(x) * std::pow(x, (r + 1.0) / k)), 1e-300);
            };
            MinimaxResult fit2 = constrained_minimax(half.F, NodeMultiset{}, n, den2, grid);
            res.ratio_at_half = fit2.objective;
            break;
        }
    }
    return res;
}

} // namespace approx
