#include "approx/numcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace approx {

double phi_weight(double x) {
    if (x < -1.0 || x > 1.0)
        throw std::domain_error("phi_weight: x outside [-1,1]");
    return std::sqrt((1.0 - x) * (1.0 + x));
}

double rho(int n, double x) {
    if (n < 0) throw std::invalid_argument("rho: negative n");
    if (n == 0) return 1.0;
    double nn = static_cast<double>(n);
    return phi_weight(x) / nn + 1.0 / (nn * nn);
}

EndpointZone endpoint_zone(int n) {
    if (n < 1) throw std::invalid_argument("endpoint_zone: n must be >= 1");
    double d = 1.0 / (static_cast<double>(n) * n);
    return {Interval{-1.0, -1.0 + d}, Interval{1.0 - d, 1.0}};
}

ChebPartition::ChebPartition(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("ChebPartition: n must be >= 1");
    nodes_.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        nodes_[static_cast<std::size_t>(j)] = std::cos(j * std::numbers::pi / n);
    nodes_.front() = 1.0;
    nodes_.back() = -1.0;
    if (n % 2 == 0) nodes_[static_cast<std::size_t>(n / 2)] = 0.0;
}

double ChebPartition::node(int j) const {
    if (j < 0 || j > n_) throw std::out_of_range("ChebPartition::node: bad index");
    return nodes_[static_cast<std::size_t>(j)];
}

Interval ChebPartition::interval(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("ChebPartition::interval: bad index");
    return {node(j), node(j - 1)};
}

double ChebPartition::h(int j) const { return interval(j).length(); }

double ChebPartition::psi(int j, double x) const {
    if (j < 1 || j > n_ - 1) throw std::out_of_range("ChebPartition::psi: j must be in 1..n-1");
    double hj = h(j);
    return hj / (std::abs(x - node(j)) + hj);
}

double ChebPartition::chi(int j, double x) const {
    if (j < 1 || j > n_ - 1) throw std::out_of_range("ChebPartition::chi: j must be in 1..n-1");
    return x >= node(j) ? 1.0 : 0.0;
}

int ChebPartition::locate(double x) const {
    if (x < -1.0 || x > 1.0) throw std::domain_error("ChebPartition::locate: x outside [-1,1]");
    // nodes_ is decreasing; find smallest j with node(j) <= x
    for (int j = 1; j <= n_; ++j)
        if (x >= node(j)) return j;
    return n_;
}

EvalGrid::EvalGrid(std::vector<double> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

EvalGrid EvalGrid::uniform(Interval J, std::size_t count) {
    if (count < 2) throw std::invalid_argument("EvalGrid::uniform: need at least 2 points");
    std::vector<double> p(count);
    for (std::size_t i = 0; i < count; ++i)
        p[i] = J.a + (J.b - J.a) * static_cast<double>(i) / static_cast<double>(count - 1);
    p.back() = J.b;
    return EvalGrid(std::move(p));
}

EvalGrid EvalGrid::rho_adapted(int n, int per_rho) {
    if (n < 1 || per_rho < 1) throw std::invalid_argument("EvalGrid::rho_adapted: bad arguments");
    // x = cos(theta), |dx| = sin(theta)|dtheta| <= rho_n(x)*n*|dtheta|,
    // so a theta step of 1/(per_rho*n) keeps the x spacing under rho_n/per_rho.
    std::size_t m = static_cast<std::size_t>(std::ceil(std::numbers::pi * per_rho * n)) + 1;
    std::vector<double> p(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        p[i] = std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(m));
    p.front() = 1.0;
    p.back() = -1.0;
    return EvalGrid(std::move(p));
}

EvalGrid EvalGrid::log_spaced(double lo, double hi, std::size_t count) {
    if (!(0.0 < lo && lo < hi) || count < 2)
        throw std::invalid_argument("EvalGrid::log_spaced: bad arguments");
    std::vector<double> p(count);
    double la = std::log(lo), lb = std::log(hi);
    for (std::size_t i = 0; i < count; ++i)
        p[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(count - 1));
    p.front() = lo;
    p.back() = hi;
    return EvalGrid(std::move(p));
}

EvalGrid EvalGrid::restricted(Interval J) const {
    std::vector<double> p;
    for (double x : pts_)
        if (J.contains(x)) p.push_back(x);
    return EvalGrid(std::move(p));
}

EvalGrid EvalGrid::merged(const EvalGrid& other) const {
    std::vector<double> p = pts_;
    p.insert(p.end(), other.pts_.begin(), other.pts_.end());
    return EvalGrid(std::move(p));
}

} // namespace approx
