#pragma once

// Polynomials in the Chebyshev T basis on [-1,1]: Clenshaw evaluation,
// coefficient-space calculus, and fast value<->coefficient transforms on
// the Chebyshev-Gauss-Lobatto grid (DCT-I).

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace approx {

class ChebPoly {
public:
    ChebPoly() : c_(1, 0.0) {}
    explicit ChebPoly(std::vector<double> coeffs);

    static ChebPoly zero() { return ChebPoly(); }
    static ChebPoly constant(double v) { return ChebPoly({v}); }
    static ChebPoly identity() { return ChebPoly({0.0, 1.0}); }
    static ChebPoly basis(int k);                    // T_k
    static ChebPoly from_monomial(const std::vector<double>& mono); // sum m_k x^k

    // Interpolate f at the degree+1 Chebyshev-Gauss-Lobatto points of J
    // (affinely mapped); exact for polynomials of matching degree.
    template <class F>
    static ChebPoly interpolate(F&& f, int degree, double a = -1.0, double b = 1.0);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coeffs() const { return c_; }

    double eval(double x) const;
    std::vector<double> eval(const std::vector<double>& xs) const;
    // value and first nu derivatives at x, by Clenshaw on successive
    // coefficient-space derivatives (fine at moderate degree)
    std::vector<double> eval_jet(double x, int nu) const;

    ChebPoly derivative() const;
    // an antiderivative (integration constant chosen so A(-1) = 0)
    ChebPoly antiderivative() const;

    ChebPoly& operator+=(const ChebPoly& o);
    ChebPoly& operator-=(const ChebPoly& o);
    ChebPoly& operator*=(double s);
    friend ChebPoly operator+(ChebPoly l, const ChebPoly& r) { return l += r; }
    friend ChebPoly operator-(ChebPoly l, const ChebPoly& r) { return l -= r; }
    friend ChebPoly operator*(ChebPoly l, double s) { return l *= s; }
    friend ChebPoly operator*(double s, ChebPoly r) { return r *= s; }
    ChebPoly operator*(const ChebPoly& o) const;     // O(d1*d2) convolution

    ChebPoly trimmed(double tol) const;
    double max_abs_coeff() const;

    // JSON round-trip; meta entries are carried verbatim
    std::string to_json(const std::map<std::string, std::string>& meta = {}) const;
    static ChebPoly from_json(const std::string& text);

private:
    std::vector<double> c_;
};

// Values at the Chebyshev-Gauss-Lobatto points x_i = cos(i*pi/N), i = 0..N,
// from coefficients c_0..c_M (M <= N), and the inverse transform. Both are
// DCT-I under the hood and cost O(N log N).
std::vector<double> cheb_vals_from_coeffs(const std::vector<double>& coeffs, std::size_t N);
std::vector<double> cheb_coeffs_from_vals(const std::vector<double>& vals);

// The grid the two transforms above use.
std::vector<double> cheb_lobatto_points(std::size_t N);

template <class F>
ChebPoly ChebPoly::interpolate(F&& f, int degree, double a, double b) {
    std::size_t N = static_cast<std::size_t>(degree);
    std::vector<double> vals(N + 1);
    auto pts = cheb_lobatto_points(N);
    for (std::size_t i = 0; i <= N; ++i)
        vals[i] = f(0.5 * (a + b) + 0.5 * (b - a) * pts[i]);
    return ChebPoly(cheb_coeffs_from_vals(vals));
}

} // namespace approx
