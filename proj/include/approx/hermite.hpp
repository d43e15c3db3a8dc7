#pragma once

// Divided differences with repeated nodes, Newton-form Hermite
// interpolants, node-multiset geometry (gap quantities, distance-sorted
// permutations, distance products), and local Whitney-type fits.

#include <string>
#include <vector>

#include "approx/cheb.hpp"
#include "approx/function_model.hpp"
#include "approx/numcore.hpp"

namespace approx {

// Interpolation nodes z_i with multiplicities l_i (1-based multiplicity,
// i.e. l_i = 1 is plain Lagrange data at z_i).
class NodeMultiset {
public:
    NodeMultiset() = default;
    NodeMultiset(std::vector<double> zs, std::vector<int> mults);
    // mini-language: "z:m,z:m,...", e.g. "-1:2,0:1,1:2"
    static NodeMultiset parse(const std::string& text);

    std::size_t distinct_count() const { return z_.size(); }
    int total() const { return s_; }                     // sum of multiplicities
    double z(std::size_t i) const { return z_[i]; }
    int mult(std::size_t i) const { return l_[i]; }
    const std::vector<double>& distinct() const { return z_; }
    std::vector<double> flat() const;                    // ascending, repeated

    bool empty() const { return z_.empty(); }
    double min_gap() const;                              // delta(Y), distinct nodes
    // min over j of flat[j+r+1] - flat[j]; 0 when any multiplicity > r+1
    double lambda_r(int r) const;

    // distinct indices sorted by distance from x; ties prefer the smaller node
    std::vector<std::size_t> sigma(double x) const;
    // product over the m+1 distance-closest distinct nodes of |x - z|;
    // m = -1 gives 1
    double distance_product(double x, int m) const;

    NodeMultiset restricted(Interval J) const;
    NodeMultiset with_node(double z, int mult) const;    // merge (max of mults)

private:
    std::vector<double> z_;
    std::vector<int> l_;
    int s_ = 0;
};

// [y_0,...,y_m; f], any node order, repetitions allowed anywhere
// (coincident block rule f^{(m)}(y)/m! plus the two-term recursion).
double divided_difference(const FunctionModel& f, std::vector<double> ys);

// Newton-form polynomial sum_j c_j * prod_{i<j} (x - y_i).
struct NewtonForm {
    std::vector<double> nodes;
    std::vector<double> coeffs;

    double eval(double x) const;
    std::vector<double> eval_jet(double x, int nu) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    // expand into the Chebyshev T basis of [-1,1]; intended for node sets
    // that are well scaled relative to that interval
    ChebPoly to_cheb() const;
};

// Hermite interpolant matching f^{(j)}(z_i) for j < l_i; degree total-1.
NewtonForm hermite_interpolant(const FunctionModel& f, const NodeMultiset& Y);

struct RemainderCheck {
    double lhs;    // f(x) - L(x)
    double rhs;    // [x, y_0..y_m; f] * prod (x - y_j)
    double rel_err;
};
RemainderCheck remainder_identity_check(const FunctionModel& f, const NodeMultiset& Y, double x);

struct WhitneyLocal {
    NewtonForm L;
    NodeMultiset nodes_used;   // after padding
    double sup_err;            // grid sup of |f - L| on the interval
    double bound;              // (b-a)^r * omega_{k}(f^{(r)}, b-a; [a,b])
};

// Interpolate f on Y (restricted to [a,b]) padded with fill nodes at the
// largest gaps until k+r simple-node slots are used; the reported bound has
// no constant in front, callers compare sup_err / bound across inputs.
WhitneyLocal whitney_local(const FunctionModel& f, const NodeMultiset& Y, int k, int r,
                           Interval ab, std::size_t grid_points = 64);

} // namespace approx
