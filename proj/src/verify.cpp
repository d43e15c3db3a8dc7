#include "approx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace approx {

std::string to_string(EstimateTag tag) {
    switch (tag) {
        case EstimateTag::classdir: return "classdir";
        case EstimateTag::sim2: return "sim2";
        case EstimateTag::main_1_8: return "main_1_8";
        case EstimateTag::tr1: return "tr1";
        case EstimateTag::tr2: return "tr2";
        case EstimateTag::maingen_4g: return "maingen_4g";
        case EstimateTag::mainnew_4nnn: return "mainnew_4nnn";
        case EstimateTag::mainnew1_78: return "mainnew1_78";
        case EstimateTag::an2: return "an2";
        case EstimateTag::an222: return "an222";
        case EstimateTag::estwr1: return "estwr1";
        case EstimateTag::corin: return "corin";
        case EstimateTag::qmonotone: return "qmonotone";
    }
    return "?";
}

ModulusProfile omega_profile(const FunctionModel& f, int deriv, int k) {
    static std::map<std::string, ModulusProfile> cache;
    static std::mutex mtx;
    std::string key = f.label() + "#" + std::to_string(deriv) + "#" + std::to_string(k);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    RealFn g = f.deriv_fn(deriv);
    Interval dom = f.domain();
    EvalGrid xg = EvalGrid::uniform(dom, 801);
    EvalGrid ts = EvalGrid::log_spaced(1e-8, dom.length(), 48);
    ModulusProfile prof =
        ModulusProfile::build(g, k, dom, xg, std::vector<double>(ts.begin(), ts.end()));
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, prof);
    return prof;
}

namespace {

// distance products over the multiset (repetitions count), and the
// (r+1)-th closest multiset point
struct FlatDistances {
    std::vector<double> d;   // sorted |x - y_j| over the flat list
    std::vector<double> y;   // matching nodes
};

FlatDistances flat_sorted(const NodeMultiset& Y, double x) {
    FlatDistances out;
    auto flat = Y.flat();
    std::vector<std::size_t> idx(flat.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        double da = std::abs(x - flat[a]), db = std::abs(x - flat[b]);
        if (da != db) return da < db;
        return flat[a] < flat[b];
    });
    for (std::size_t i : idx) {
        out.d.push_back(std::abs(x - flat[i]));
        out.y.push_back(flat[i]);
    }
    return out;
}

double dist_to_distinct(const NodeMultiset& Y, double x) {
    double d = std::numeric_limits<double>::infinity();
    for (double z : Y.distinct()) d = std::min(d, std::abs(x - z));
    return d;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument("measure: " + what);
}

} // namespace

RatioReport measure(const EstimateKind& kind, const FunctionModel& f, const JetEval& P,
                    const NodeMultiset& Y, int n, const EvalGrid& grid,
                    const NoiseFn& noise) {
    const int k = kind.k, r = kind.r;
    const int ell = kind.ell > 0 ? kind.ell : k;
    require(k >= 1 && r >= 0 && n >= 1, "need k >= 1, r >= 0, n >= 1");
    require(f.r_max() >= r, "f does not carry r derivatives");

    switch (kind.tag) {
        case EstimateTag::main_1_8:
        case EstimateTag::mainnew_4nnn:
        case EstimateTag::tr1:
            require(0 <= kind.nu && kind.nu <= r, "need 0 <= nu <= r");
            require(1 <= ell && ell <= k, "need 1 <= ell <= k");
            break;
        case EstimateTag::maingen_4g:
            require(0 <= kind.m && kind.m <= r, "need 0 <= m <= r");
            break;
        case EstimateTag::mainnew1_78:
        case EstimateTag::an222:
            require(!Y.empty(), "node set required");
            break;
        case EstimateTag::estwr1:
            require(r >= 1 && !Y.empty(), "need r >= 1 and a node set");
            break;
        case EstimateTag::corin:
            require(kind.alpha > 0 && !Y.empty(), "need alpha > 0 and a node set");
            break;
        default:
            break;
    }
    if (kind.tag == EstimateTag::mainnew_4nnn) require(0 <= kind.m && kind.m <= r, "need 0 <= m <= r");

    // derivative order of the measured error
    int nu = 0;
    if (kind.tag == EstimateTag::tr1 || kind.tag == EstimateTag::main_1_8 ||
        kind.tag == EstimateTag::mainnew_4nnn)
        nu = kind.nu;
    else if (kind.tag == EstimateTag::tr2)
        nu = k + r;

    // modulus profile used by the denominator
    int omega_deriv = r;
    int omega_order = k;
    if (kind.tag == EstimateTag::main_1_8 || kind.tag == EstimateTag::mainnew_4nnn)
        omega_order = ell;
    if (kind.tag == EstimateTag::qmonotone) {
        omega_deriv = 0;
        omega_order = 1;
    }
    bool needs_omega = kind.tag != EstimateTag::estwr1 && kind.tag != EstimateTag::corin;
    ModulusProfile omega = needs_omega
                               ? omega_profile(f, omega_deriv, omega_order)
                               : ModulusProfile({1.0}, {1.0}, 1, Interval{-1.0, 1.0});

    double f_scale = std::max(f.sup_norm(grid), 1e-30);

    RatioReport rep;
    rep.kind = kind;
    // measurement resolution: plain polynomial evaluation resolves errors down
    // to ~256 eps * scale; the assembled glued-polynomial pipeline (signalled
    // by a supplied noise estimator) carries divided-difference and blend
    // roundoff of up to ~1e-12 * scale, so its floor is correspondingly higher
    if (kind.tag != EstimateTag::tr2)
        rep.noise_floor = (noise ? 4096.0 : 256.0) *
                          std::numeric_limits<double>::epsilon() *
                          std::max(f.sup_norm(grid, nu), 1.0);
    for (double x : grid) {
        // domain restrictions
        if (kind.tag == EstimateTag::sim2 || kind.tag == EstimateTag::main_1_8) {
            if (std::abs(x) < 1.0 - 1.0 / (static_cast<double>(n) * n)) continue;
        }

        double rho_x = rho(n, x);
        double phi2 = (1.0 - x) * (1.0 + x);
        double phi = phi2 > 0.0 ? std::sqrt(phi2) : 0.0;

        double num;
        if (kind.tag == EstimateTag::tr2) {
            num = std::abs(P(x, nu)[static_cast<std::size_t>(nu)]);
        } else {
            num = std::abs(f.deriv(nu, x) - P(x, nu)[static_cast<std::size_t>(nu)]);
        }

        double den = 0.0;
        switch (kind.tag) {
            case EstimateTag::classdir:
            case EstimateTag::an2:
                den = std::pow(rho_x, r) * omega.eval(rho_x);
                break;
            case EstimateTag::sim2:
                den = std::pow(phi2, r) *
                      omega.eval(std::pow(phi2, 1.0 / k) * std::pow(n, -2.0 + 2.0 / k));
                break;
            case EstimateTag::main_1_8:
                den = std::pow(phi2, r - kind.nu) *
                      omega.eval(std::pow(phi2, 1.0 / ell) * std::pow(n, -2.0 + 2.0 / ell));
                break;
            case EstimateTag::tr1:
                den = std::pow(rho_x, r - kind.nu) * omega.eval(rho_x);
                break;
            case EstimateTag::tr2:
                den = std::pow(rho_x, -k) * omega.eval(rho_x);
                break;
            case EstimateTag::maingen_4g: {
                double d = std::abs(x - kind.x0);
                if (kind.m <= r - 1)
                    den = std::pow(d, kind.m + 1) * std::pow(rho_x, r - kind.m - 1) *
                          omega.eval(rho_x);
                else
                    den = std::pow(d, r) *
                          omega.eval(std::pow(d, 1.0 / k) * std::pow(rho_x, 1.0 - 1.0 / k));
                break;
            }
            case EstimateTag::mainnew_4nnn: {
                double d = std::abs(x - kind.x0);
                int sigma = std::max(kind.m - kind.nu + 1, 0);
                if (kind.m <= r - 1)
                    den = std::pow(d, sigma) * std::pow(rho_x, r - kind.nu - sigma) *
                          omega.eval(rho_x);
                else
                    den = std::pow(d, r - kind.nu) *
                          omega.eval(std::pow(d, 1.0 / ell) * std::pow(rho_x, 1.0 - 1.0 / ell));
                break;
            }
            case EstimateTag::mainnew1_78:
            case EstimateTag::an222: {
                int s = Y.total();
                FlatDistances fd = flat_sorted(Y, x);
                if (s <= r) {
                    double D = 1.0;
                    for (int j = 0; j < s; ++j) D *= fd.d[static_cast<std::size_t>(j)];
                    den = D * std::pow(rho_x, r - s) * omega.eval(rho_x);
                } else {
                    double D = 1.0;
                    for (int j = 0; j < r; ++j) D *= fd.d[static_cast<std::size_t>(j)];
                    double dr = fd.d[static_cast<std::size_t>(r)];
                    den = D * omega.eval(std::pow(dr, 1.0 / k) * std::pow(rho_x, 1.0 - 1.0 / k));
                }
                break;
            }
            case EstimateTag::estwr1:
                den = std::pow(std::min(rho_x, dist_to_distinct(Y, x)), r) * kind.scale;
                break;
            case EstimateTag::corin: {
                double d = dist_to_distinct(Y, x);
                double a = kind.alpha;
                bool integer = std::abs(a - std::round(a)) < 1e-12;
                double base;
                if (!integer) {
                    base = std::min(d, rho_x);
                } else {
                    double dd = d > 0.0 ? d * std::pow(std::abs(std::log(d / 3.0)), 1.0 / a)
                                        : 0.0;
                    base = std::min(dd, rho_x);
                }
                den = std::pow(base, a) * kind.scale;
                break;
            }
            case EstimateTag::qmonotone:
                den = omega.eval(std::min(phi2, phi / n)) * kind.scale;
                break;
        }

        rep.x.push_back(x);
        rep.num.push_back(num);
        rep.den.push_back(den);
        ++rep.points_used;
        if (den > 0.0 && std::isfinite(den)) {
            double ratio = num / den;
            rep.ratio.push_back(ratio);
            double floor_x = rep.noise_floor;
            if (noise && kind.tag != EstimateTag::tr2)
                floor_x = std::max(floor_x, 8.0 * noise(x, nu));
            if (num <= floor_x) {
                ++rep.floor_points;
            } else if (ratio > rep.A) {
                rep.A = ratio;
                rep.worst_x = x;
            }
        } else {
            rep.ratio.push_back(0.0);
            ++rep.zero_den_points;
            rep.max_num_at_zero_den = std::max(rep.max_num_at_zero_den, num);
            if (num > 1e-10 * f_scale) rep.zero_den_ok = false;
        }
    }
    return rep;
}

RatioReport measure(const EstimateKind& kind, const FunctionModel& f, const ChebPoly& P,
                    const NodeMultiset& Y, int n, const EvalGrid& grid) {
    return measure(kind, f, [&P](double x, int nu) { return P.eval_jet(x, nu); }, Y, n, grid);
}

RatioReport measure(const EstimateKind& kind, const FunctionModel& f, const AssembledPoly& P,
                    int n, const EvalGrid& grid) {
    return measure(
        kind, f, [&P](double x, int nu) { return P.eval_jet_structured(x, nu); }, P.S.Y, n, grid,
        [&P](double x, int nu) { return P.eval_noise(x, nu); });
}

std::string RatioReport::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "x,num,den,ratio\n";
    for (std::size_t i = 0; i < x.size(); ++i)
        out << x[i] << ',' << num[i] << ',' << den[i] << ',' << ratio[i] << '\n';
    return out.str();
}

std::string RatioReport::summary_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind.tag);
    j["params"] = {{"k", kind.k},   {"r", kind.r},        {"nu", kind.nu},
                   {"ell", kind.ell}, {"m", kind.m},        {"x0", kind.x0},
                   {"alpha", kind.alpha}, {"scale", kind.scale}};
    j["A"] = A;
    j["worst_x"] = worst_x;
    j["points_used"] = points_used;
    j["zero_den_points"] = zero_den_points;
    j["max_num_at_zero_den"] = max_num_at_zero_den;
    j["zero_den_ok"] = zero_den_ok;
    j["noise_floor"] = noise_floor;
    j["floor_points"] = floor_points;
    return j.dump(2);
}

QMonotoneResult qmonotone_test(const RealFn& g, int q, std::size_t u_count,
                               std::size_t x_count) {
    if (q < 1) throw std::invalid_argument("qmonotone_test: q >= 1 required");
    QMonotoneResult res;
    double scale = 0.0;
    for (std::size_t i = 0; i < x_count; ++i) {
        double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(x_count - 1);
        scale = std::max(scale, std::abs(g(x)));
    }
    Interval dom{-1.0, 1.0};
    for (std::size_t iu = 1; iu <= u_count; ++iu) {
        double u = 2.0 / static_cast<double>(q) * static_cast<double>(iu) /
                   static_cast<double>(u_count);
        for (std::size_t i = 0; i < x_count; ++i) {
            double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(x_count - 1);
            if (x - 0.5 * q * u < -1.0 || x + 0.5 * q * u > 1.0) continue;
            double d = finite_difference(g, q, u, x, dom);
            if (d < res.worst) {
                res.worst = d;
                res.at_x = x;
                res.at_u = u;
            }
        }
    }
    res.ok = res.worst >= -1e-10 * std::max(scale, 1e-30);
    return res;
}

} // namespace approx
