#pragma once

// Core geometry for weighted polynomial approximation on [-1,1]:
// the degree-dependent weight rho_n, the Chebyshev partition, the
// interval-relative decay factor psi_j, and evaluation grids whose
// density follows rho_n near the endpoints.

#include <cstddef>
#include <vector>

namespace approx {

struct Interval {
    double a = -1.0;
    double b = 1.0;

    double length() const { return b - a; }
    double mid() const { return 0.5 * (a + b); }
    bool contains(double x) const { return a <= x && x <= b; }
};

// sqrt(1 - x^2); throws std::domain_error outside [-1,1].
double phi_weight(double x);

// rho_n(x) = phi(x)/n + 1/n^2 for n >= 1; rho_0 is identically 1.
double rho(int n, double x);

// The two endpoint intervals [-1, -1+n^-2] and [1-n^-2, 1].
struct EndpointZone {
    Interval left;
    Interval right;

    bool contains(double x) const { return left.contains(x) || right.contains(x); }
};
EndpointZone endpoint_zone(int n);

// Chebyshev partition of [-1,1]: nodes x_j = cos(j*pi/n), j = 0..n
// (decreasing in j), intervals I_j = [x_j, x_{j-1}], j = 1..n.
class ChebPartition {
public:
    explicit ChebPartition(int n);

    int n() const { return n_; }
    double node(int j) const;           // x_j, 0 <= j <= n
    Interval interval(int j) const;     // I_j, 1 <= j <= n
    double h(int j) const;              // |I_j|

    // psi_j(x) = |I_j| / (|x - x_j| + |I_j|), 1 <= j <= n-1
    double psi(int j, double x) const;
    // chi_j(x) = 1 for x >= x_j, else 0
    double chi(int j, double x) const;

    // index j in 1..n with x in I_j (ties resolve to the lower index,
    // i.e. the interval whose left endpoint is x)
    int locate(double x) const;

private:
    int n_;
    std::vector<double> nodes_;
};

// A sorted set of evaluation points.
class EvalGrid {
public:
    EvalGrid() = default;
    explicit EvalGrid(std::vector<double> pts);

    static EvalGrid uniform(Interval J, std::size_t count);
    // Grid on [-1,1] whose local spacing is <= rho_n(x)/per_rho everywhere;
    // built from a uniform grid in theta = acos(x).
    static EvalGrid rho_adapted(int n, int per_rho = 8);
    // Log-spaced points in [lo, hi], 0 < lo < hi.
    static EvalGrid log_spaced(double lo, double hi, std::size_t count);

    EvalGrid restricted(Interval J) const;
    EvalGrid merged(const EvalGrid& other) const;

    const std::vector<double>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    double operator[](std::size_t i) const { return pts_[i]; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

private:
    std::vector<double> pts_;
};

} // namespace approx
