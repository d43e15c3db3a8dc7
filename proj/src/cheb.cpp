#include "approx/cheb.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace approx {

ChebPoly::ChebPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, 0.0);
}

ChebPoly ChebPoly::basis(int k) {
    if (k < 0) throw std::invalid_argument("ChebPoly::basis: negative index");
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    c.back() = 1.0;
    return ChebPoly(std::move(c));
}

ChebPoly ChebPoly::from_monomial(const std::vector<double>& mono) {
    ChebPoly p;                     // Horner in the Chebyshev algebra
    ChebPoly x = identity();
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
        p = p * x;
        p += constant(*it);
    }
    return p;
}

double ChebPoly::eval(double x) const {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = c_.size(); k-- > 1;) {
        double b0 = 2.0 * x * b1 - b2 + c_[k];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + c_[0];
}

std::vector<double> ChebPoly::eval(const std::vector<double>& xs) const {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = eval(xs[i]);
    return out;
}

std::vector<double> ChebPoly::eval_jet(double x, int nu) const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(nu) + 1);
    ChebPoly p = *this;
    out.push_back(p.eval(x));
    for (int v = 1; v <= nu; ++v) {
        p = p.derivative();
        out.push_back(p.eval(x));
    }
    return out;
}

ChebPoly ChebPoly::derivative() const {
    int n = degree();
    if (n == 0) return zero();
    std::vector<double> b(static_cast<std::size_t>(n), 0.0);
    double bp1 = 0.0, bp2 = 0.0;    // b_{k+1}, b_{k+2}
    for (int k = n; k >= 1; --k) {
        double bk = bp2 + 2.0 * k * c_[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(k) - 1] = bk;
        bp2 = bp1;
        bp1 = bk;
    }
    b[0] *= 0.5;
    return ChebPoly(std::move(b));
}

ChebPoly ChebPoly::antiderivative() const {
    int n = degree();
    std::vector<double> b(static_cast<std::size_t>(n) + 2, 0.0);
    auto a = [&](int k) { return (k >= 0 && k <= n) ? c_[static_cast<std::size_t>(k)] : 0.0; };
    b[1] = a(0) - 0.5 * a(2);
    for (int k = 2; k <= n + 1; ++k)
        b[static_cast<std::size_t>(k)] = (a(k - 1) - a(k + 1)) / (2.0 * k);
    ChebPoly A(std::move(b));
    auto& c0 = const_cast<std::vector<double>&>(A.coeffs());
    c0[0] -= A.eval(-1.0);
    return A;
}

ChebPoly& ChebPoly::operator+=(const ChebPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

ChebPoly& ChebPoly::operator-=(const ChebPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

ChebPoly& ChebPoly::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

ChebPoly ChebPoly::operator*(const ChebPoly& o) const {
    // T_i T_j = (T_{i+j} + T_{|i-j|}) / 2
    std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0.0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            double v = 0.5 * c_[i] * o.c_[j];
            r[i + j] += v;
            r[i >= j ? i - j : j - i] += v;
        }
    }
    return ChebPoly(std::move(r));
}

ChebPoly ChebPoly::trimmed(double tol) const {
    std::size_t last = 0;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (std::abs(c_[k]) > tol) last = k;
    return ChebPoly(std::vector<double>(c_.begin(), c_.begin() + static_cast<long>(last) + 1));
}

double ChebPoly::max_abs_coeff() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

std::string ChebPoly::to_json(const std::map<std::string, std::string>& meta) const {
    nlohmann::json j;
    j["basis"] = "chebyshev";
    j["degree"] = degree();
    j["coeffs"] = c_;
    if (!meta.empty()) {
        nlohmann::json m;
        for (const auto& [k, v] : meta) m[k] = v;
        j["meta"] = m;
    }
    return j.dump(2);
}

ChebPoly ChebPoly::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (j.at("basis").get<std::string>() != "chebyshev")
        throw std::runtime_error("ChebPoly::from_json: unsupported basis");
    return ChebPoly(j.at("coeffs").get<std::vector<double>>());
}

// ---- DCT-I transforms ------------------------------------------------

namespace {

// FFTW REDFT00 of length L = N+1:
//   out_k = in_0 + (-1)^k in_N + 2 * sum_{j=1}^{N-1} in_j cos(pi j k / N)
// Plans are cached per size; execution copies through the plan's buffers.
struct DctPlan {
    fftw_plan plan = nullptr;
    double* buf = nullptr;
    std::size_t len = 0;

    explicit DctPlan(std::size_t L) : len(L) {
        buf = fftw_alloc_real(L);
        plan = fftw_plan_r2r_1d(static_cast<int>(L), buf, buf, FFTW_REDFT00, FFTW_ESTIMATE);
        if (!plan) throw std::runtime_error("fftw plan creation failed");
    }
    ~DctPlan() {
        if (plan) fftw_destroy_plan(plan);
        if (buf) fftw_free(buf);
    }
    DctPlan(const DctPlan&) = delete;
    DctPlan& operator=(const DctPlan&) = delete;

    void run(std::vector<double>& data) {
        std::copy(data.begin(), data.end(), buf);
        fftw_execute(plan);
        std::copy(buf, buf + len, data.begin());
    }
};

DctPlan& plan_for(std::size_t L) {
    static std::map<std::size_t, std::unique_ptr<DctPlan>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[L];
    if (!slot) slot = std::make_unique<DctPlan>(L);
    return *slot;
}

} // namespace

std::vector<double> cheb_lobatto_points(std::size_t N) {
    std::vector<double> p(N + 1);
    for (std::size_t i = 0; i <= N; ++i)
        p[i] = std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(N));
    p.front() = 1.0;
    p.back() = -1.0;
    return p;
}

std::vector<double> cheb_vals_from_coeffs(const std::vector<double>& coeffs, std::size_t N) {
    if (N < 1 || coeffs.size() > N + 1)
        throw std::invalid_argument("cheb_vals_from_coeffs: grid smaller than degree");
    std::vector<double> in(N + 1, 0.0);
    in[0] = coeffs[0];
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        in[k] = (k == N) ? coeffs[k] : 0.5 * coeffs[k];
    plan_for(N + 1).run(in);
    return in;
}

std::vector<double> cheb_coeffs_from_vals(const std::vector<double>& vals) {
    if (vals.size() < 2) throw std::invalid_argument("cheb_coeffs_from_vals: need >= 2 values");
    std::size_t N = vals.size() - 1;
    std::vector<double> out = vals;
    plan_for(N + 1).run(out);
    double inv = 1.0 / static_cast<double>(N);
    for (std::size_t k = 0; k <= N; ++k)
        out[k] *= (k == 0 || k == N) ? 0.5 * inv : inv;
    return out;
}

} // namespace approx
