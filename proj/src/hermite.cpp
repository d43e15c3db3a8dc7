#include "approx/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "approx/smoothness.hpp"

namespace approx {

NodeMultiset::NodeMultiset(std::vector<double> zs, std::vector<int> mults) {
    if (zs.size() != mults.size())
        throw std::invalid_argument("NodeMultiset: node/multiplicity size mismatch");
    std::vector<std::size_t> idx(zs.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return zs[a] < zs[b]; });
    for (std::size_t i : idx) {
        if (mults[i] < 1) throw std::invalid_argument("NodeMultiset: multiplicity must be >= 1");
        if (!z_.empty() && zs[i] == z_.back())
            throw std::invalid_argument("NodeMultiset: duplicate node");
        z_.push_back(zs[i]);
        l_.push_back(mults[i]);
        s_ += mults[i];
    }
}

NodeMultiset NodeMultiset::parse(const std::string& text) {
    std::vector<double> zs;
    std::vector<int> ms;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("NodeMultiset::parse: expected z:m in '" + item + "'");
        try {
            std::size_t used = 0;
            double z = std::stod(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("trailing characters");
            std::string mtxt = item.substr(colon + 1);
            int m = std::stoi(mtxt, &used);
            if (used != mtxt.size()) throw std::invalid_argument("trailing characters");
            zs.push_back(z);
            ms.push_back(m);
        } catch (const std::exception&) {
            throw std::invalid_argument("NodeMultiset::parse: malformed entry '" + item + "'");
        }
    }
    if (zs.empty()) throw std::invalid_argument("NodeMultiset::parse: empty node list");
    return NodeMultiset(std::move(zs), std::move(ms));
}

std::vector<double> NodeMultiset::flat() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(s_));
    for (std::size_t i = 0; i < z_.size(); ++i)
        for (int j = 0; j < l_[i]; ++j) out.push_back(z_[i]);
    return out;
}

double NodeMultiset::min_gap() const {
    if (z_.size() < 2) return std::numeric_limits<double>::infinity();
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < z_.size(); ++i) g = std::min(g, z_[i] - z_[i - 1]);
    return g;
}

double NodeMultiset::lambda_r(int r) const {
    auto ys = flat();
    if (static_cast<int>(ys.size()) < r + 2) return std::numeric_limits<double>::infinity();
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j + static_cast<std::size_t>(r) + 1 < ys.size(); ++j)
        g = std::min(g, ys[j + static_cast<std::size_t>(r) + 1] - ys[j]);
    return g;
}

std::vector<std::size_t> NodeMultiset::sigma(double x) const {
    std::vector<std::size_t> idx(z_.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        double da = std::abs(x - z_[a]), db = std::abs(x - z_[b]);
        if (da != db) return da < db;
        return z_[a] < z_[b];
    });
    return idx;
}

double NodeMultiset::distance_product(double x, int m) const {
    if (m < 0) return 1.0;
    if (static_cast<std::size_t>(m) >= z_.size())
        throw std::out_of_range("NodeMultiset::distance_product: m exceeds distinct count");
    auto idx = sigma(x);
    double prod = 1.0;
    for (int j = 0; j <= m; ++j) prod *= std::abs(x - z_[idx[static_cast<std::size_t>(j)]]);
    return prod;
}

NodeMultiset NodeMultiset::restricted(Interval J) const {
    std::vector<double> zs;
    std::vector<int> ms;
    for (std::size_t i = 0; i < z_.size(); ++i) {
        if (J.contains(z_[i])) {
            zs.push_back(z_[i]);
            ms.push_back(l_[i]);
        }
    }
    NodeMultiset out;
    out.z_ = std::move(zs);
    out.l_ = std::move(ms);
    out.s_ = 0;
    for (int m : out.l_) out.s_ += m;
    return out;
}

NodeMultiset NodeMultiset::with_node(double z, int mult) const {
    NodeMultiset out = *this;
    auto it = std::lower_bound(out.z_.begin(), out.z_.end(), z);
    if (it != out.z_.end() && *it == z) {
        std::size_t i = static_cast<std::size_t>(it - out.z_.begin());
        int old = out.l_[i];
        out.l_[i] = std::max(old, mult);
        out.s_ += out.l_[i] - old;
    } else {
        std::size_t i = static_cast<std::size_t>(it - out.z_.begin());
        out.z_.insert(it, z);
        out.l_.insert(out.l_.begin() + static_cast<long>(i), mult);
        out.s_ += mult;
    }
    return out;
}

// ---- divided differences --------------------------------------------------

namespace {

double dd_recursive(const FunctionModel& f, std::vector<double>& ys, std::size_t lo,
                    std::size_t hi) {
    // works on ys[lo..hi] in place; may reorder within the range
    std::size_t m = hi - lo;
    if (m == 0) return f(ys[lo]);
    bool all_equal = true;
    for (std::size_t i = lo + 1; i <= hi && all_equal; ++i)
        if (ys[i] != ys[lo]) all_equal = false;
    if (all_equal) {
        double fact = 1.0;
        for (std::size_t i = 2; i <= m; ++i) fact *= static_cast<double>(i);
        return f.deriv(static_cast<int>(m), ys[lo]) / fact;
    }
    if (ys[hi] == ys[lo]) {
        // pull some distinct node to the back; divided differences are
        // symmetric so this is just a change of evaluation order
        for (std::size_t i = lo + 1; i < hi; ++i) {
            if (ys[i] != ys[lo]) {
                std::swap(ys[i], ys[hi]);
                break;
            }
        }
    }
    // capture the excluded endpoints now: the recursive calls may reorder
    // elements inside their ranges (including the one at position hi)
    double a = ys[lo], b = ys[hi];
    double left = dd_recursive(f, ys, lo, hi - 1);
    double right = dd_recursive(f, ys, lo + 1, hi);
    return (right - left) / (b - a);
}

} // namespace

double divided_difference(const FunctionModel& f, std::vector<double> ys) {
    if (ys.empty()) throw std::invalid_argument("divided_difference: empty node list");
    return dd_recursive(f, ys, 0, ys.size() - 1);
}

double NewtonForm::eval(double x) const {
    double p = coeffs.back();
    for (std::size_t j = coeffs.size() - 1; j-- > 0;)
        p = p * (x - nodes[j]) + coeffs[j];
    return p;
}

std::vector<double> NewtonForm::eval_jet(double x, int nu) const {
    // propagate (p, p', ..., p^(nu)) through the Horner recursion
    std::vector<double> jet(static_cast<std::size_t>(nu) + 1, 0.0);
    jet[0] = coeffs.back();
    for (std::size_t j = coeffs.size() - 1; j-- > 0;) {
        double dx = x - nodes[j];
        for (std::size_t v = static_cast<std::size_t>(nu); v >= 1; --v)
            jet[v] = jet[v] * dx + static_cast<double>(v) * jet[v - 1];
        jet[0] = jet[0] * dx + coeffs[j];
    }
    return jet;
}

ChebPoly NewtonForm::to_cheb() const {
    ChebPoly p = ChebPoly::constant(coeffs.back());
    ChebPoly x = ChebPoly::identity();
    for (std::size_t j = coeffs.size() - 1; j-- > 0;) {
        p = p * (x - ChebPoly::constant(nodes[j]));
        p += ChebPoly::constant(coeffs[j]);
    }
    return p;
}

NewtonForm hermite_interpolant(const FunctionModel& f, const NodeMultiset& Y) {
    std::vector<double> ys = Y.flat();
    std::size_t s = ys.size();
    if (s == 0) throw std::invalid_argument("hermite_interpolant: empty node set");
    // standard tableau on the sorted flat list; sorted order makes equal
    // endpoints of a range imply a fully coincident block
    std::vector<std::vector<double>> dd(s);
    for (std::size_t i = 0; i < s; ++i) {
        dd[i].resize(s - i);
        dd[i][0] = f(ys[i]);
    }
    std::vector<double> fact(s, 1.0);
    for (std::size_t j = 2; j < s; ++j) fact[j] = fact[j - 1] * static_cast<double>(j);
    for (std::size_t j = 1; j < s; ++j) {
        for (std::size_t i = 0; i + j < s; ++i) {
            if (ys[i + j] == ys[i])
                dd[i][j] = f.deriv(static_cast<int>(j), ys[i]) / fact[j];
            else
                dd[i][j] = (dd[i + 1][j - 1] - dd[i][j - 1]) / (ys[i + j] - ys[i]);
        }
    }
    NewtonForm out;
    out.nodes = ys;
    out.coeffs.resize(s);
    for (std::size_t j = 0; j < s; ++j) out.coeffs[j] = dd[0][j];
    return out;
}

RemainderCheck remainder_identity_check(const FunctionModel& f, const NodeMultiset& Y, double x) {
    NewtonForm L = hermite_interpolant(f, Y);
    double lhs = f(x) - L.eval(x);
    std::vector<double> ext = Y.flat();
    ext.insert(ext.begin(), x);
    double dd = divided_difference(f, std::move(ext));
    double prod = 1.0;
    for (double y : L.nodes) prod *= (x - y);
    double rhs = dd * prod;
    // when the interpolant reproduces f exactly, both sides are zero up to
    // roundoff and a ratio of rounding residues is meaningless; divided
    // differences of clustered nodes cannot resolve the identity below
    // ~1e-9 of the function scale, so identity values under 1e-5 of that
    // scale are compared against the floor instead of against each other
    double floor = 1e-5 * (1.0 + std::abs(f(x)));
    double scale = std::max({std::abs(lhs), std::abs(rhs), floor});
    return {lhs, rhs, std::abs(lhs - rhs) / scale};
}

WhitneyLocal whitney_local(const FunctionModel& f, const NodeMultiset& Y, int k, int r,
                           Interval ab, std::size_t grid_points) {
    if (k < 1 || r < 0) throw std::invalid_argument("whitney_local: need k >= 1, r >= 0");
    std::size_t target = static_cast<std::size_t>(k + r);
    NodeMultiset used = Y.restricted(ab);
    if (static_cast<std::size_t>(used.total()) > target)
        throw std::invalid_argument("whitney_local: more node data than k+r slots");

    // pad with simple nodes at the largest gaps (interval endpoints seed the
    // gap structure when too few nodes are present)
    while (static_cast<std::size_t>(used.total()) < target) {
        std::vector<double> zs = used.distinct();
        std::vector<double> walls;
        walls.push_back(ab.a);
        for (double z : zs) walls.push_back(z);
        walls.push_back(ab.b);
        double best_lo = ab.a, best_hi = ab.b, best = -1.0;
        for (std::size_t i = 1; i < walls.size(); ++i) {
            double g = walls[i] - walls[i - 1];
            if (g > best) {
                best = g;
                best_lo = walls[i - 1];
                best_hi = walls[i];
            }
        }
        double cand = 0.5 * (best_lo + best_hi);
        if (best <= 0.0 || std::find(zs.begin(), zs.end(), cand) != zs.end()) {
            // interval endpoints not yet used as nodes
            if (std::find(zs.begin(), zs.end(), ab.a) == zs.end()) cand = ab.a;
            else if (std::find(zs.begin(), zs.end(), ab.b) == zs.end()) cand = ab.b;
            else throw std::runtime_error("whitney_local: cannot place fill node");
        }
        used = used.with_node(cand, 1);
    }

    NewtonForm L = hermite_interpolant(f, used);
    EvalGrid g = EvalGrid::uniform(ab, grid_points);
    double sup = 0.0;
    for (double x : g) sup = std::max(sup, std::abs(f(x) - L.eval(x)));

    double len = ab.length();
    double bound;
    if (r == 0) {
        bound = omega_k([&f](double x) { return f(x); }, k, len, ab, g);
    } else {
        auto fr = f.deriv_fn(r);
        bound = std::pow(len, r) * omega_k(fr, k, len, ab, g);
    }
    return {std::move(L), std::move(used), sup, bound};
}

} // namespace approx
