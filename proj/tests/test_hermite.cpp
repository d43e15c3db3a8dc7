#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "approx/hermite.hpp"

using namespace approx;

TEST_CASE("NodeMultiset parse and accessors") {
    NodeMultiset Y = NodeMultiset::parse("-1:2,0.5:1,1:3");
    REQUIRE(Y.distinct_count() == 3);
    CHECK(Y.total() == 6);
    CHECK(Y.z(0) == doctest::Approx(-1.0));
    CHECK(Y.mult(0) == 2);
    CHECK(Y.z(1) == doctest::Approx(0.5));
    CHECK(Y.z(2) == doctest::Approx(1.0));
    CHECK(Y.mult(2) == 3);

    auto flat = Y.flat();
    REQUIRE(flat.size() == 6);
    CHECK(std::is_sorted(flat.begin(), flat.end()));
    CHECK(flat[0] == doctest::Approx(-1.0));
    CHECK(flat[1] == doctest::Approx(-1.0));
    CHECK(flat[5] == doctest::Approx(1.0));

    CHECK(Y.min_gap() == doctest::Approx(0.5));
    CHECK_THROWS_AS(NodeMultiset::parse("0:0"), std::invalid_argument);
    CHECK_THROWS_AS(NodeMultiset::parse("abc"), std::invalid_argument);
}

TEST_CASE("lambda_r gap quantity") {
    NodeMultiset Y = NodeMultiset::parse("-1:1,0:1,1:1");
    // flat = {-1, 0, 1}; r = 1: min over j of flat[j+2] - flat[j] = 2
    CHECK(Y.lambda_r(1) == doctest::Approx(2.0));
    // multiplicity above r+1 collapses the gap to zero
    NodeMultiset Z = NodeMultiset::parse("-1:3,1:1");
    CHECK(Z.lambda_r(1) == doctest::Approx(0.0));
}

TEST_CASE("sigma ordering and distance products") {
    NodeMultiset Y = NodeMultiset::parse("-1:1,0:2,0.8:1");
    auto order = Y.sigma(0.7);
    REQUIRE(order.size() == 3);
    CHECK(Y.z(order[0]) == doctest::Approx(0.8));
    CHECK(Y.z(order[1]) == doctest::Approx(0.0));
    CHECK(Y.z(order[2]) == doctest::Approx(-1.0));

    CHECK(Y.distance_product(0.7, -1) == doctest::Approx(1.0));
    CHECK(Y.distance_product(0.7, 0) == doctest::Approx(0.1));
    CHECK(Y.distance_product(0.7, 1) == doctest::Approx(0.1 * 0.7));
    CHECK(Y.distance_product(0.7, 2) == doctest::Approx(0.1 * 0.7 * 1.7));
}

TEST_CASE("restricted and with_node") {
    NodeMultiset Y = NodeMultiset::parse("-1:2,0:1,1:2");
    NodeMultiset R = Y.restricted({-0.5, 1.0});
    REQUIRE(R.distinct_count() == 2);
    CHECK(R.z(0) == doctest::Approx(0.0));
    CHECK(R.total() == 3);

    NodeMultiset W = Y.with_node(0.0, 3);     // merge takes the max multiplicity
    CHECK(W.total() == 7);
    NodeMultiset W2 = Y.with_node(0.25, 1);   // new node
    CHECK(W2.total() == 6);
    CHECK(W2.distinct_count() == 4);
}

TEST_CASE("divided differences: distinct-node oracle and permutations") {
    FunctionModel f = FunctionModel::exponential();
    // oracle: classical recursion on sorted distinct nodes
    std::vector<double> ys = {-0.8, -0.1, 0.3, 0.9};
    std::vector<double> dd(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) dd[i] = f(ys[i]);
    for (std::size_t lvl = 1; lvl < ys.size(); ++lvl)
        for (std::size_t i = ys.size() - 1; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (ys[i] - ys[i - lvl]);
    double oracle = dd.back();

    CHECK(divided_difference(f, ys) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(divided_difference(f, {0.9, -0.8, 0.3, -0.1}) ==
          doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("divided differences: coincident block rule") {
    FunctionModel f = FunctionModel::sine(2.0);
    // [y, y, y; f] = f''(y)/2
    double y = 0.4;
    CHECK(divided_difference(f, {y, y, y}) ==
          doctest::Approx(f.deriv(2, y) / 2.0).epsilon(1e-12));
    // repetitions scattered through the list
    double mixed = divided_difference(f, {y, 0.1, y});
    double sorted = divided_difference(f, {0.1, y, y});
    CHECK(mixed == doctest::Approx(sorted).epsilon(1e-11));
}

TEST_CASE("coincident-node limit approaches the derivative") {
    FunctionModel f = FunctionModel::exponential();
    double prev = 1e300;
    for (double h : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        double err = std::abs(divided_difference(f, {0.0, h}) - f.deriv(1, 0.0));
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev <= 1e-5);
}

TEST_CASE("Hermite interpolant constraints and degree") {
    FunctionModel f = FunctionModel::sine(3.0, 0.5);
    NodeMultiset Y = NodeMultiset::parse("-0.9:2,0.2:1,0.7:3");
    NewtonForm L = hermite_interpolant(f, Y);
    CHECK(L.degree() == Y.total() - 1);
    for (std::size_t i = 0; i < Y.distinct_count(); ++i) {
        auto jet = L.eval_jet(Y.z(i), Y.mult(i) - 1);
        for (int v = 0; v < Y.mult(i); ++v) {
            double want = f.deriv(v, Y.z(i));
            CHECK(jet[static_cast<std::size_t>(v)] ==
                  doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("Hermite interpolant reproduces polynomials of fitting degree") {
    FunctionModel f = FunctionModel::polynomial({1.0, -2.0, 0.5, 0.25});
    NodeMultiset Y = NodeMultiset::parse("-1:2,1:2");   // 4 data = degree 3
    NewtonForm L = hermite_interpolant(f, Y);
    for (double x : {-0.7, 0.0, 0.33, 0.95})
        CHECK(L.eval(x) == doctest::Approx(f(x)).epsilon(1e-13));
}

TEST_CASE("remainder identity") {
    FunctionModel f = FunctionModel::exponential();
    NodeMultiset Y = NodeMultiset::parse("-0.5:1,0:2,0.6:1");
    for (double x : {-0.9, 0.3, 0.8}) {
        auto rc = remainder_identity_check(f, Y, x);
        CHECK(rc.rel_err <= 1e-10);
        CHECK(rc.lhs == doctest::Approx(rc.rhs).epsilon(1e-9));
    }
}

TEST_CASE("NewtonForm eval_jet and Chebyshev expansion agree") {
    NewtonForm N;
    N.nodes = {0.0, 0.5, 0.5};
    N.coeffs = {1.0, -2.0, 3.0, 0.5};   // degree 3
    ChebPoly C = N.to_cheb();
    for (double x : {-1.0, -0.4, 0.2, 0.5, 1.0}) {
        CHECK(C.eval(x) == doctest::Approx(N.eval(x)).epsilon(1e-12));
        auto jn = N.eval_jet(x, 2);
        auto jc = C.eval_jet(x, 2);
        CHECK(jn[1] == doctest::Approx(jc[1]).epsilon(1e-10));
        CHECK(jn[2] == doctest::Approx(jc[2]).epsilon(1e-10));
    }
}

TEST_CASE("whitney_local pads to k+r data and bounds the local error") {
    FunctionModel f = FunctionModel::abs_pow(2.5);
    NodeMultiset Y;   // no prescribed data inside
    for (auto [k, r] : {std::pair{2, 1}, {3, 2}}) {
        Interval ab{0.1, 0.4};
        WhitneyLocal wl = whitney_local(f, Y, k, r, ab);
        CHECK(wl.nodes_used.total() == k + r);
        CHECK(wl.L.degree() == k + r - 1);
        CHECK(wl.sup_err >= 0.0);
        CHECK(wl.bound > 0.0);
        // almost-best local approximation: the grid error is a modest
        // multiple of the Whitney-type quantity
        CHECK(wl.sup_err <= 10.0 * wl.bound);
    }
}

TEST_CASE("whitney_local keeps prescribed Hermite data exact") {
    FunctionModel f = FunctionModel::sine(5.0);
    NodeMultiset Y = NodeMultiset::parse("1:3");
    WhitneyLocal wl = whitney_local(f, Y, 3, 2, {0.95, 1.0});
    auto jet = wl.L.eval_jet(1.0, 2);
    for (int v = 0; v <= 2; ++v)
        CHECK(jet[static_cast<std::size_t>(v)] ==
              doctest::Approx(f.deriv(v, 1.0)).epsilon(1e-10));
    CHECK_THROWS_AS(whitney_local(f, NodeMultiset::parse("0:6"), 2, 1, {-0.5, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("seeded random permutation invariance") {
    std::mt19937_64 gen(2026);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FunctionModel fs[] = {FunctionModel::exponential(), FunctionModel::sine(2.0),
                          FunctionModel::polynomial({0.0, 0.0, 0.0, 1.0})};
    for (int rep = 0; rep < 60; ++rep) {
        const FunctionModel& f = fs[rep % 3];
        int s = 2 + static_cast<int>(gen() % 5);
        std::vector<double> ys(static_cast<std::size_t>(s));
        for (double& y : ys) y = u(gen);
        double base = divided_difference(f, ys);
        std::shuffle(ys.begin(), ys.end(), gen);
        double shuffled = divided_difference(f, ys);
        double scale = std::max(1.0, std::abs(base));
        CHECK(std::abs(base - shuffled) / scale <= 1e-10);
    }
}
