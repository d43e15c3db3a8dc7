#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "approx/poly_checks.hpp"

using namespace approx;

TEST_CASE("dlb_ratio basic structure") {
    const int n = 16;
    EvalGrid g = EvalGrid::rho_adapted(n);
    ChebPoly T = ChebPoly::basis(n);
    auto phi = [](double t) { return t; };

    DlbRatio res = dlb_ratio(T, n, phi, 0.0, 1, g);
    CHECK(res.lhs > 0.0);
    CHECK(res.rhs > 0.0);
    CHECK(res.ratio == doctest::Approx(res.lhs / res.rhs));

    // the zero polynomial reports ratio 0
    DlbRatio z = dlb_ratio(ChebPoly::zero(), n, phi, 0.0, 1, g);
    CHECK(z.ratio == 0.0);
}

TEST_CASE("dlb_ratio stays bounded across degrees") {
    // the weighted derivative-vs-function ratio admits a degree-independent
    // constant; calibrate at n = 8 and require no blow-up at larger n
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto phi = [](double t) { return std::sqrt(t) * t; };   // t^{1.5}

    double base = 0.0;
    std::vector<int> ns = {8, 16, 32};
    for (int n : ns) {
        EvalGrid g = EvalGrid::rho_adapted(n);
        double worst = 0.0;
        for (int rep = 0; rep < 40; ++rep) {
            std::vector<double> c(static_cast<std::size_t>(n) + 1);
            for (double& v : c) v = u(gen);
            worst = std::max(worst, dlb_ratio(ChebPoly(c), n, phi, -1.0, 2, g).ratio);
        }
        if (n == 8) base = worst;
        CHECK(worst <= 3.0 * base);
    }
}

TEST_CASE("dzyadyk_pointwise_check at a fixed point") {
    const int n = 12, m = 3;
    EvalGrid g = EvalGrid::rho_adapted(n);
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double x0 : {0.0, 0.5, 0.95}) {
        double worst = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<double> c(static_cast<std::size_t>(n) + 1);
            for (double& v : c) v = u(gen);
            DzyadykPointwise res = dzyadyk_pointwise_check(ChebPoly(c), n, m, x0, g);
            CHECK(res.rho_power == doctest::Approx(std::pow(rho(n, x0), m - 1)));
            CHECK(res.ratio == doctest::Approx(res.deriv_at_x0 / res.rho_power));
            worst = std::max(worst, res.ratio);
        }
        // the normalized derivative admits a bounded constant
        CHECK(worst < 100.0);
    }
}

TEST_CASE("odd-degree sharpness example") {
    for (int n : {3, 5, 7, 19, 51, 99}) {
        SharpnessExample ex = dz59_sharpness(n);
        CHECK(ex.n == n);
        double nn = static_cast<double>(n);
        CHECK(std::abs(ex.deriv_at_0 - nn * nn) / (nn * nn) <= 1e-12);
        CHECK(ex.expected == doctest::Approx(nn * nn));
        // naive threshold n * rho_n(0)^{-1} = n^3/(n+1)
        CHECK(ex.naive_threshold == doctest::Approx(nn * nn * nn / (nn + 1.0)));
        CHECK(ex.exceeds);
    }
    CHECK_THROWS_AS(dz59_sharpness(4), std::invalid_argument);
}
