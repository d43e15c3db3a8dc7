#pragma once

// A test function together with as many exact derivatives as it owns.
// Everything downstream (moduli, ratio measurements, counterexample
// diagnostics) consumes functions through this, so derivative access is
// closed-form, never finite-differenced.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "approx/numcore.hpp"

namespace approx {

class FunctionModel {
public:
    // fn(nu, x) returns the nu-th derivative at x; r_max is the highest nu
    // for which fn's value is a continuous derivative on the domain.
    FunctionModel(std::string label, Interval domain, int r_max,
                  std::function<double(int, double)> fn)
        : label_(std::move(label)), domain_(domain), r_max_(r_max), fn_(std::move(fn)) {}

    const std::string& label() const { return label_; }
    Interval domain() const { return domain_; }
    int r_max() const { return r_max_; }

    double operator()(double x) const { return fn_(0, x); }
    double deriv(int nu, double x) const {
        if (nu < 0 || nu > r_max_)
            throw std::out_of_range("FunctionModel::deriv: order beyond r_max for " + label_);
        return fn_(nu, x);
    }
    // the nu-th derivative as a plain callable
    std::function<double(double)> deriv_fn(int nu) const {
        if (nu < 0 || nu > r_max_)
            throw std::out_of_range("FunctionModel::deriv_fn: order beyond r_max for " + label_);
        auto f = fn_;
        return [f, nu](double x) { return f(nu, x); };
    }

    double sup_norm(const EvalGrid& g, int nu = 0) const {
        double m = 0.0;
        for (double x : g) m = std::max(m, std::abs(fn_(nu, x)));
        return m;
    }

    // ---- builders ----
    static FunctionModel polynomial(std::vector<double> monomial_coeffs,
                                    Interval J = {-1.0, 1.0});
    static FunctionModel sine(double a, double b = 0.0, Interval J = {-1.0, 1.0});
    static FunctionModel exponential(Interval J = {-1.0, 1.0});
    static FunctionModel abs_pow(double gamma, Interval J = {-1.0, 1.0});   // |x|^gamma
    static FunctionModel pos_pow(double gamma, double z = 0.0,
                                 Interval J = {-1.0, 1.0});                 // (x-z)_+^gamma

private:
    std::string label_;
    Interval domain_;
    int r_max_;
    std::function<double(int, double)> fn_;
};

// Spec mini-language for configs and the command line:
//   "sin:A[:B]"        sin(Ax + B)
//   "exp"              e^x
//   "abs_pow:G"        |x|^G
//   "pos_pow:G[:Z]"    (x - Z)_+^G
//   "poly:c0,c1,..."   sum c_i x^i
// Throws std::invalid_argument on a malformed spec.
FunctionModel make_function(const std::string& spec);

} // namespace approx
