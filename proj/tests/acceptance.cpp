// Acceptance harness: one criterion per invocation (argv[1] in 1..13), one
// [PASS]/[FAIL] line per criterion, exit status 0 iff the criterion holds.
// Tolerances are pinned in code next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "approx/cheb.hpp"
#include "approx/construct.hpp"
#include "approx/counterex.hpp"
#include "approx/function_model.hpp"
#include "approx/hermite.hpp"
#include "approx/numcore.hpp"
#include "approx/poly_checks.hpp"
#include "approx/report.hpp"
#include "approx/rng.hpp"
#include "approx/smoothness.hpp"
#include "approx/verify.hpp"

using namespace approx;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string str(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.4g", v);
    return b;
}
std::string str(int v) { return std::to_string(v); }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

FunctionModel random_smooth(Rng& rng) {
    switch (rng.below(3)) {
        case 0: return FunctionModel::sine(rng.uniform(0.5, 4.0), rng.uniform(0.0, 1.0));
        case 1: return FunctionModel::exponential();
        default: {
            std::vector<double> c(5);
            for (double& v : c) v = rng.uniform(-2.0, 2.0);
            return FunctionModel::polynomial(std::move(c));
        }
    }
}

NodeMultiset random_nodes(Rng& rng, int s_total, int r) {
    std::vector<double> zs;
    std::vector<int> mults;
    int left = s_total;
    while (left > 0) {
        double z;
        bool fresh = true;
        do {
            z = rng.uniform(-1.0, 1.0);
            fresh = true;
            for (double u : zs) fresh = fresh && std::abs(u - z) > 0.05;
        } while (!fresh);
        int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(left, r + 1))));
        zs.push_back(z);
        mults.push_back(m);
        left -= m;
    }
    return NodeMultiset(std::move(zs), std::move(mults));
}

// ---- criterion 1 -----------------------------------------------------------

Outcome crit1() {
    Outcome out;
    auto t0 = Clock::now();
    Rng rng(20260826);
    double worst_perm = 0.0, worst_rem = 0.0, worst_con = 0.0;
    for (int inst = 0; inst < 500; ++inst) {
        int r = static_cast<int>(rng.below(4));
        int s = r + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(6 - r)));
        FunctionModel f = random_smooth(rng);
        NodeMultiset Y = random_nodes(rng, s, r);
        std::vector<double> ys = Y.flat();

        double d0 = divided_difference(f, ys);
        std::vector<double> shuffled = ys;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        double d1 = divided_difference(f, shuffled);
        worst_perm = std::max(worst_perm,
                              std::abs(d0 - d1) / std::max(std::abs(d0), 1.0));

        double x = rng.uniform(-1.0, 1.0);
        RemainderCheck rc = remainder_identity_check(f, Y, x);
        worst_rem = std::max(worst_rem, rc.rel_err);

        NewtonForm L = hermite_interpolant(f, Y);
        for (std::size_t i = 0; i < Y.distinct_count(); ++i) {
            auto jet = L.eval_jet(Y.z(i), Y.mult(i) - 1);
            for (int j = 0; j < Y.mult(i); ++j) {
                double want = f.deriv(j, Y.z(i));
                double got = jet[static_cast<std::size_t>(j)];
                worst_con = std::max(worst_con, std::abs(want - got) /
                                                    std::max(std::abs(want), 1.0));
            }
        }
    }
    double dt = seconds_since(t0);
    out.require(worst_perm <= 1e-10, "permutation invariance " + str(worst_perm));
    out.require(worst_rem <= 1e-9, "remainder identity " + str(worst_rem));
    out.require(worst_con <= 1e-8, "constraint residual " + str(worst_con));
    out.require(dt < 10.0, "runtime " + str(dt) + "s");
    out.note("500 instances, perm " + str(worst_perm) + ", rem " +
             str(worst_rem) + ", con " + str(worst_con) + ", " +
             str(dt) + "s");
    return out;
}

// ---- criterion 2 -----------------------------------------------------------

Outcome crit2() {
    Outcome out;
    std::vector<FunctionModel> fs = {FunctionModel::exponential(), FunctionModel::sine(1.0),
                                     FunctionModel::polynomial({0.0, 0.0, 0.0, 1.0})};
    for (const FunctionModel& f : fs) {
        double prev = std::numeric_limits<double>::infinity();
        double last = 0.0;
        for (int e = 2; e <= 6; ++e) {
            double h = std::pow(10.0, -e);
            double d = std::abs(divided_difference(f, {0.0, h}) - f.deriv(1, 0.0));
            out.require(d <= prev, f.label() + ": not monotone at h=1e-" + str(e));
            prev = d;
            last = d;
        }
        out.require(last <= 1e-5, f.label() + ": final gap " + str(last));
    }
    out.note("coincident-node limit monotone to <= 1e-5 for exp, sin, x^3");
    return out;
}

// ---- criterion 3 -----------------------------------------------------------

double two_node_sup_err(double gamma, double eps) {
    FunctionModel f = FunctionModel::pos_pow(gamma);
    NewtonForm L = hermite_interpolant(f, NodeMultiset({0.0, eps}, {1, 1}));
    double sup = 0.0;
    for (int g = 0; g <= 4000; ++g) {
        double x = -1.0 + 2.0 * g / 4000.0;
        sup = std::max(sup, std::abs(f(x) - L.eval(x)));
    }
    return sup;
}

Outcome crit3() {
    Outcome out;
    std::vector<double> rough, smooth;
    for (int j = 3; j <= 10; ++j) {
        rough.push_back(two_node_sup_err(0.5, std::pow(2.0, -j)));
        smooth.push_back(two_node_sup_err(1.5, std::pow(2.0, -j)));
    }
    double min_growth = std::numeric_limits<double>::infinity();
    double max_growth = 0.0;
    for (std::size_t i = 1; i < rough.size(); ++i) {
        min_growth = std::min(min_growth, rough[i] / rough[i - 1]);
        max_growth = std::max(max_growth, smooth[i] / smooth[i - 1]);
    }
    out.require(min_growth >= 1.3,
                "rough growth per halving " + str(min_growth) + " < 1.3");
    out.require(max_growth <= 1.2,
                "smooth growth per halving " + str(max_growth) + " > 1.2");
    out.note("x_+^0.5 grows x" + str(min_growth) +
             " per halving; x_+^1.5 within x" + str(max_growth) +
             " per halving (sup -> " + str(smooth.back()) + ")");
    return out;
}

// ---- criteria 4 and 5 share the construction corpus -------------------------

struct CorpusCombo {
    FunctionModel f;
    std::string yspec;
    int k, r, n;
};

std::vector<CorpusCombo> corpus() {
    std::vector<CorpusCombo> out;
    for (auto [k, r] : {std::pair{2, 1}, std::pair{3, 2}}) {
        std::vector<std::string> yspecs = {
            "-1:" + str(r + 1) + ",1:" + str(r + 1),
            "-1:1,0:2,1:1"};
        for (const std::string& y : yspecs)
            for (const char* fs : {"sin:5", "abs_pow:2.5", "pos_pow:3"})
                for (int n : {64, 128, 256})
                    out.push_back({make_function(fs), y, k, r, n});
    }
    return out;
}

EvalGrid measure_grid(int n) {
    return EvalGrid::rho_adapted(n, 4).merged(EvalGrid::uniform({-1.0, 1.0}, 801));
}

Outcome crit4() {
    Outcome out;
    auto t0 = Clock::now();
    double worst_con = 0.0;
    double worst_ladder = 0.0;
    for (auto [k, r] : {std::pair{2, 1}, std::pair{3, 2}}) {
        std::vector<std::string> yspecs = {
            "-1:" + str(r + 1) + ",1:" + str(r + 1),
            "-1:1,0:2,1:1"};
        for (const std::string& yspec : yspecs) {
            NodeMultiset Y = NodeMultiset::parse(yspec);
            for (const char* fs : {"sin:5", "abs_pow:2.5", "pos_pow:3"}) {
                FunctionModel f = make_function(fs);
                double A64 = 0.0;
                for (int n : {64, 128, 256}) {
                    AssembledPoly P = assemble_Pn(build_S(f, Y, k, r, n));
                    InterpolationReport ir = check_interpolation(P, f);
                    worst_con = std::max(worst_con, ir.max_rel_resid);
                    EstimateKind kind{.tag = EstimateTag::an2, .k = k, .r = r};
                    RatioReport rep = measure(kind, f, P, n, measure_grid(n));
                    if (n == 64) A64 = std::max(rep.A, 1e-30);
                    worst_ladder = std::max(worst_ladder, rep.A / A64);
                }
            }
            // reproduction of f in P_{k+r-1}
            std::vector<double> mono(static_cast<std::size_t>(k + r), 0.0);
            for (std::size_t i = 0; i < mono.size(); ++i)
                mono[i] = (i % 2 == 0) ? 1.0 : -0.5;
            FunctionModel pf = FunctionModel::polynomial(mono);
            for (int n : {64, 128, 256}) {
                AssembledPoly P = assemble_Pn(build_S(pf, Y, k, r, n));
                double worst = 0.0;
                for (int g = 0; g <= 800; ++g) {
                    double x = -1.0 + 2.0 * g / 800.0;
                    worst = std::max(worst, std::abs(pf(x) - P.eval(x)));
                }
                out.require(worst <= 1e-9, "reproduction " + str(worst) +
                                               " at n=" + str(n) + ", Y=" + yspec);
            }
        }
    }
    double dt = seconds_since(t0);
    out.require(worst_con <= 1e-8, "constraints " + str(worst_con));
    out.require(worst_ladder <= 3.0, "A(n) ladder ratio " + str(worst_ladder));
    out.require(dt < 300.0, "runtime " + str(dt) + "s");
    out.note("constraints " + str(worst_con) + ", ladder max/first " +
             str(worst_ladder) + ", " + str(dt) + "s");
    return out;
}

Outcome crit5() {
    Outcome out;
    double worst_spread = 0.0;
    bool zero_den_ok = true;
    for (auto [k, r] : {std::pair{2, 1}, std::pair{3, 2}}) {
        std::vector<std::string> yspecs = {
            "-1:" + str(r + 1) + ",1:" + str(r + 1),
            "-1:1,0:2,1:1"};
        for (const std::string& yspec : yspecs) {
            NodeMultiset Y = NodeMultiset::parse(yspec);
            for (const char* fs : {"sin:5", "abs_pow:2.5", "pos_pow:3"}) {
                FunctionModel f = make_function(fs);
                std::vector<double> a78, a18;
                for (int n : {64, 128, 256}) {
                    AssembledPoly P = assemble_Pn(build_S(f, Y, k, r, n));
                    EvalGrid grid = measure_grid(n);
                    EstimateKind k78{.tag = EstimateTag::mainnew1_78, .k = k, .r = r};
                    RatioReport r78 = measure(k78, f, P, n, grid);
                    EstimateKind k18{.tag = EstimateTag::main_1_8, .k = k, .r = r, .nu = 0};
                    RatioReport r18 = measure(k18, f, P, n, grid);
                    a78.push_back(r78.A);
                    a18.push_back(r18.A);
                    zero_den_ok = zero_den_ok && r78.zero_den_ok && r18.zero_den_ok;
                }
                // non-growth: the whole ladder stays within x3 of its value
                // at the smallest n; ratios that decay with n pass trivially
                for (auto* v : {&a78, &a18}) {
                    double first = std::max(v->front(), 1e-30);
                    double hi = *std::max_element(v->begin(), v->end());
                    worst_spread = std::max(worst_spread, hi / first);
                }
            }
        }
    }
    out.require(worst_spread <= 3.0, "ladder max/first " + str(worst_spread));
    out.require(zero_den_ok, "numerator above 1e-10*||f|| at a zero-denominator point");
    out.note("node-set and endpoint-zone ratios: ladder max/first " +
             str(worst_spread) + ", zero-den clean");
    return out;
}

// ---- criterion 6 -----------------------------------------------------------

Outcome crit6() {
    Outcome out;
    struct Cfg {
        const char* name;
        std::function<double(double)> phi;
        double s;
        int nu;
    };
    std::vector<Cfg> cfgs = {{"phi=t,s=0,nu=1", [](double t) { return t; }, 0.0, 1},
                             {"phi=t^1.5,s=-1,nu=2",
                              [](double t) { return std::pow(t, 1.5); }, -1.0, 2}};
    for (const Cfg& cfg : cfgs) {
        Rng rng(77);
        double base = 0.0;
        for (int n : {8, 16, 32, 64, 128}) {
            EvalGrid grid = EvalGrid::rho_adapted(n, 4);
            double worst = 0.0;
            for (int inst = 0; inst < 200; ++inst) {
                std::vector<double> c(static_cast<std::size_t>(n) + 1);
                for (double& v : c) v = rng.uniform(-1.0, 1.0);
                ChebPoly P(std::move(c));
                DlbRatio dr = dlb_ratio(P, n, cfg.phi, cfg.s, cfg.nu, grid);
                worst = std::max(worst, dr.ratio);
            }
            if (n == 8) base = worst;
            out.require(worst <= 3.0 * base,
                        std::string(cfg.name) + ": n=" + str(n) + " max " +
                            str(worst) + " vs 3x base " + str(base));
        }
    }
    out.note("200 seeded polynomials per n in {8..128}, both weight configs within x3 of n=8");
    return out;
}

// ---- criterion 7 -----------------------------------------------------------

Outcome crit7() {
    Outcome out;
    double worst_rel = 0.0;
    for (int n = 3; n <= 99; n += 2) {
        SharpnessExample ex = dz59_sharpness(n);
        worst_rel = std::max(worst_rel,
                             std::abs(ex.deriv_at_0 - ex.expected) / ex.expected);
        out.require(ex.exceeds, "n=" + str(n) + " does not exceed n^3/(n+1)");
    }
    out.require(worst_rel <= 1e-12, "derivative vs n^2 rel " + str(worst_rel));
    out.note("odd n in {3..99}: |..'(0)| = n^2 to rel " + str(worst_rel) +
             ", all exceed the naive threshold");
    return out;
}

// ---- criterion 8 -----------------------------------------------------------

Outcome crit8() {
    Outcome out;
    Rng rng(4242);
    for (int inst = 0; inst < 50; ++inst) {
        double alpha = rng.uniform(0.2, 0.95);
        std::vector<double> ts, ws;
        double t = 1e-6;
        while (t <= 1.0) {
            ts.push_back(t);
            ws.push_back(std::pow(t, alpha) * (1.0 + 0.3 * rng.uniform(-1.0, 1.0)));
            t *= 1.9;
        }
        StechkinResult res = stechkin_regularize(ts, ws, alpha, 2.0);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            out.require(res.w_tilde[i] <= res.w_reg[i] * (1.0 + 1e-12),
                        "w > w* at instance " + str(inst));
            out.require(res.w_reg[i] <= 4.0 * res.w_tilde[i] * (1.0 + 1e-12),
                        "w* > 4w at instance " + str(inst));
        }
        auto lookup = [&res](double tq) {
            for (std::size_t i = 0; i < res.t.size(); ++i)
                if (res.t[i] == tq) return res.w_reg[i];
            return 0.0;
        };
        MajorantCheck mc = check_majorant_class(lookup, alpha, 1.0, res.t);
        out.require(mc.ok, "w* fails the exact class at instance " + str(inst));
        if (!out.ok) break;
    }
    out.note("50 perturbed powers, M=2: w <= w* <= 4w samplewise, w* in the exact class");
    return out;
}

// ---- criterion 9 -----------------------------------------------------------

Outcome crit9() {
    Outcome out;
    PathologicalPhi phi(1.0, 6);
    std::vector<double> bps;
    for (int j = phi.depth(); j >= 0; --j) bps.push_back(phi.t(j));
    MajorantCheck exact = check_majorant_class([&phi](double t) { return phi.eval(t); },
                                               1.0, 1.0, bps);
    out.require(exact.ok, "exact-class check fails at breakpoints");
    MajorantCheck scan = phi.scan_non_membership(0.5, 10.0);
    out.require(!scan.ok, "no witness against the relaxed beta=0.5, M=10 class");
    if (!scan.ok)
        out.note("witness pair t1=" + str(scan.t1) +
                 ", t2=" + str(scan.t2));
    return out;
}

// ---- criterion 10 ----------------------------------------------------------

Outcome crit10() {
    Outcome out;
    NegativeInstance ci = build_case_i(0);
    for (int n : {5, 10, 20}) {
        BlowupReport rep = blowup_demo(ci, n);
        std::vector<double> R(13, 0.0);
        for (const auto& row : rep.rows)
            if (row.m >= 4 && row.m <= 12) R[static_cast<std::size_t>(row.m)] = row.ratio;
        for (int m = 5; m <= 12; ++m)
            out.require(R[static_cast<std::size_t>(m)] >=
                            R[static_cast<std::size_t>(m - 1)] * 0.95,
                        "n=" + str(n) + ": ratio dips at m=" + str(m));
        out.require(R[12] >= 2.0 * R[4],
                    "n=" + str(n) + ": R12/R4 = " + str(R[12] / R[4]));
    }

    NegativeInstance cii = build_case_ii(2, 0, EpsKind::power, 5);
    out.require(cii.ordering_ok, "staircase ordering violated");
    Interval dom{0.0, 1.0};
    EvalGrid xg = EvalGrid::uniform(dom, 1001);
    for (double t : {0.3, 0.1, 0.03, 0.01}) {
        double measured =
            omega_k([&cii](double x) { return cii.f_core(x); }, 2, t, dom, xg);
        double w = cii.omega(t);
        out.require(measured >= 0.5 * w && measured <= 2.0 * 2 * w,
                    "sandwich out of slack at t=" + str(t) + " (" +
                        str(measured / w) + ")");
    }
    double prev_down = std::numeric_limits<double>::infinity(), prev_up = -1.0;
    for (double x : cii.probes) {
        double v = cii.f_core(x);
        out.require(v <= prev_down * (1.0 + 1e-9), "F/x^r trend broken");
        out.require(v / x >= prev_up * (1.0 - 1e-9), "F/x^{r+1} trend broken");
        prev_down = v;
        prev_up = v / x;
    }
    out.note("fits n in {5,10,20}: ratio ladder nondecreasing, R12/R4 >= 2; "
             "depth-5 staircase sandwich and trends hold");
    return out;
}

// ---- criterion 11 ----------------------------------------------------------

Outcome crit11() {
    Outcome out;
    WeakSweepResult res = weak_sweep(3, 1, 8, 100.0, 0.5);
    out.require(res.found, "sweep found no eps with sup ratio >= 100");
    if (res.found) {
        out.require(res.eps_star <= std::pow(2.0, -4),
                    "eps* = " + str(res.eps_star) + " > 2^-4");
        out.require(res.ratio_at_half > res.ratio_at_star,
                    "ratio at eps*/2 (" + str(res.ratio_at_half) +
                        ") not above ratio at eps* (" + str(res.ratio_at_star) + ")");
        out.note("eps* = " + str(res.eps_star) + ", ratio " +
                 str(res.ratio_at_star) + " -> " +
                 str(res.ratio_at_half) + " at eps*/2");
    }
    return out;
}

// ---- criterion 12 ----------------------------------------------------------

Outcome crit12() {
    Outcome out;
    std::vector<FunctionModel> fs = {FunctionModel::exponential(),
                                     FunctionModel::polynomial({0.2, 0.0, 1.0}),
                                     FunctionModel::abs_pow(2.5)};
    for (const FunctionModel& f : fs) {
        ChebPoly P = ChebPoly::interpolate([&f](double x) { return f(x); }, 8);
        // detune the endpoints so the correction has something to do
        std::vector<double> c = P.coeffs();
        c[0] += 0.02;
        c[1] -= 0.01;
        ChebPoly Pd(std::move(c));
        ChebPoly Q = boolean_sum_endpoint(f, Pd);
        out.require(std::abs(Q.eval(1.0) - f(1.0)) <= 1e-12,
                    f.label() + ": Q(1) off by " + str(Q.eval(1.0) - f(1.0)));
        out.require(std::abs(Q.eval(-1.0) - f(-1.0)) <= 1e-12,
                    f.label() + ": Q(-1) off by " + str(Q.eval(-1.0) - f(-1.0)));
        ChebPoly dd = (Q - Pd).derivative().derivative();
        out.require(dd.max_abs_coeff() <= 1e-14,
                    f.label() + ": Q'' - P'' coeff " + str(dd.max_abs_coeff()));
        QMonotoneResult vq = qmonotone_test([&Q](double x) { return Q.eval(x); }, 2);
        QMonotoneResult vp = qmonotone_test([&Pd](double x) { return Pd.eval(x); }, 2);
        out.require(vq.ok == vp.ok, f.label() + ": convexity verdicts disagree");
    }
    out.note("Q matches f at +/-1, correction is affine, convexity verdicts agree");
    return out;
}

// ---- criterion 13 ----------------------------------------------------------

std::string report_bundle(std::uint64_t seed) {
    std::ostringstream bundle;
    bundle.precision(17);

    Rng rng(seed);
    FunctionModel f = FunctionModel::abs_pow(2.5);
    for (int n : {16, 32, 64}) {
        ChebPoly P = ChebPoly::interpolate([&f](double x) { return f(x); }, n);
        EstimateKind kind{.tag = EstimateTag::classdir, .k = 2, .r = 1};
        RatioReport rep = measure(kind, f, P, NodeMultiset{}, n,
                                  EvalGrid::uniform({-1.0, 1.0}, 401));
        bundle << rep.summary_json() << '\n' << rep.to_csv();
    }

    for (int n : {3, 9, 33}) {
        SharpnessExample ex = dz59_sharpness(n);
        bundle << "dz59," << ex.n << ',' << ex.deriv_at_0 << ',' << ex.naive_threshold
               << ',' << (ex.exceeds ? 1 : 0) << '\n';
    }

    NegativeInstance ci = build_case_i(0);
    bundle << blowup_demo(ci, 8).to_csv();

    std::vector<double> ts, ws;
    double t = 1e-5;
    while (t <= 1.0) {
        ts.push_back(t);
        ws.push_back(std::sqrt(t) * (1.0 + 0.25 * rng.uniform(-1.0, 1.0)));
        t *= 2.1;
    }
    StechkinResult sr = stechkin_regularize(ts, ws, 0.5, 2.0);
    for (std::size_t i = 0; i < sr.t.size(); ++i)
        bundle << "stechkin," << sr.t[i] << ',' << sr.w_tilde[i] << ',' << sr.w_reg[i] << '\n';

    FunctionModel g = make_function("sin:5");
    AssembledPoly P = assemble_Pn(build_S(g, NodeMultiset::parse("-1:2,1:2"), 2, 1, 64));
    InterpolationReport ir = check_interpolation(P, g);
    bundle << "construct,64," << ir.max_abs_resid << ',' << ir.max_rel_resid << '\n';
    EstimateKind kind{.tag = EstimateTag::an2, .k = 2, .r = 1};
    RatioReport rep = measure(kind, g, P, 64, measure_grid(64));
    bundle << rep.summary_json() << '\n';
    return bundle.str();
}

Outcome crit13() {
    Outcome out;
    auto t0 = Clock::now();
    std::string a = report_bundle(1234);
    std::string b = report_bundle(1234);
    out.require(a == b, "same-seed report bundles differ");
    write_file_atomic("acceptance_bundle.txt", a);
    double dt = seconds_since(t0);
    out.note("two same-seed runs byte-identical (" + str(static_cast<int>(a.size())) +
             " bytes each), " + str(dt) + "s");
    return out;
}

const char* kTitles[] = {
    "",
    "divided differences, remainder identity, interpolant constraints",
    "coincident-node limit of [0,h; f]",
    "two-node interpolation blow-up dichotomy",
    "constructor corpus: constraints, ratio ladder, reproduction",
    "node-set and endpoint-zone ratio non-growth on the corpus",
    "derivative-vs-function weighted ratio stability",
    "odd-degree derivative sharpness example",
    "regularized modulus sandwich",
    "piecewise majorant class membership and non-membership",
    "finite-range divergence demo and staircase instance",
    "compact-support spike sweep",
    "endpoint boolean sum",
    "report reproducibility",
};

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1..13>\n";
        return 2;
    }
    int crit = std::atoi(argv[1]);
    Outcome out;
    switch (crit) {
        case 1: out = crit1(); break;
        case 2: out = crit2(); break;
        case 3: out = crit3(); break;
        case 4: out = crit4(); break;
        case 5: out = crit5(); break;
        case 6: out = crit6(); break;
        case 7: out = crit7(); break;
        case 8: out = crit8(); break;
        case 9: out = crit9(); break;
        case 10: out = crit10(); break;
        case 11: out = crit11(); break;
        case 12: out = crit12(); break;
        case 13: out = crit13(); break;
        default:
            std::cerr << "usage: acceptance <criterion 1..13>\n";
            return 2;
    }
    std::cout << (out.ok ? "[PASS]" : "[FAIL]") << " criterion " << crit << " ("
              << kTitles[crit] << "): " << out.detail.str() << '\n';
    return out.ok ? 0 : 1;
}
