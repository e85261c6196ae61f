// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "padua/analysis.hpp"
#include "padua/chebyshev.hpp"
#include "padua/error.hpp"
#include "padua/functions.hpp"

using namespace padua;

TEST_CASE("lp_norm examples") {
    for (double p : {0.5, 1.0, 2.0, 3.0, kInfinity}) {
        CHECK(lp_norm([](const Point&) { return -3.0; }, p, 16) == doctest::Approx(3.0).epsilon(1e-13));
    }
    CHECK(std::abs(lp_norm([](const Point& x) { return x.x1; }, 2) - std::sqrt(0.5)) <= 1e-10);
    CHECK(std::abs(lp_norm([](const Point& x) { return cheb_t(3, x.x1) * cheb_t(2, x.x2); }, 2) - 0.5) <= 1e-10);
    CHECK_THROWS_AS((void)lp_norm([](const Point&) { return 1.0; }, 0.0), Error);
    CHECK_THROWS_AS((void)lp_norm([](const Point&) { return 1.0; }, 2.0, 15), Error);
}

TEST_CASE("lp_norm monotone and Pythagorean") {
    const auto f = [](const Point& x) { return std::sin(3 * x.x1) * x.x2; };
    const auto g = [&](const Point& x) { return 1.5 * std::abs(f(x)) + 0.1; };
    for (double p : {1.0, 2.0, 4.0}) CHECK(lp_norm(f, p, 64) <= lp_norm(g, p, 64) + 1e-12);
    const double a = 0.7, b = -1.3;
    const auto combo = [&](const Point& x) { return a * oracle::basis(3, 1, x) + b * oracle::basis(5, 4, x); };
    const double n2 = lp_norm(combo, 2, 64);
    CHECK(std::abs(n2 * n2 - (a * a + b * b)) <= 1e-9);
}

TEST_CASE("Fourier partial sums") {
    std::mt19937_64 rng(21);
    const int n = 6;
    const OrthoExpansion p = random_expansion(n, rng);
    const ScalarFunction pf = [&](const Point& x) { return p(x); };
    for (int t = 0; t < 20; ++t) {
        const Point x = oracle::random_point(rng);
        CHECK(std::abs(fourier_partial_sum(n, pf, x) - p(x)) <= 1e-8);
        CHECK(std::abs(fourier_partial_sum(n, [](const Point& y) { return cheb_t(n + 1, y.x1); }, x)) <= 1e-8);
    }
    const auto f = [](const Point& x) { return std::exp(x.x1 - 0.5 * x.x2); };
    const OrthoExpansion c = fourier_coefficients(n, f, 40);
    CHECK(c.coeff(0, 0) == doctest::Approx(lp_norm(f, 1, 40)).epsilon(1e-12)); // f > 0, so mean = L1 norm
    const ScalarFunction sf = [&](const Point& x) { return fourier_partial_sum(n, f, x, 40); };
    const OrthoExpansion again = fourier_coefficients(n, [&](const Point& x) { return c(x); }, 40);
    for (std::size_t i = 0; i < c.coefficients().size(); ++i) {
        CHECK(std::abs(again.coefficients()[i] - c.coefficients()[i]) <= 1e-7);
    }
    for (int t = 0; t < 5; ++t) {
        const Point x = oracle::random_point(rng);
        CHECK(std::abs(fourier_partial_sum(n, sf, x, 40) - sf(x)) <= 1e-7);
    }
}

TEST_CASE("Marcinkiewicz ratios") {
    const MarcinkiewiczResult r = marcinkiewicz_ratios(8, 2.0, 50, 42);
    CHECK(r.ratios.size() == 50);
    CHECK(r.min_ratio > 0.0);
    CHECK(r.min_ratio <= r.max_ratio);
    const MarcinkiewiczResult again = marcinkiewicz_ratios(8, 2.0, 50, 42);
    CHECK(again.ratios == r.ratios);
    for (double p : {1.0, 4.0}) {
        const MarcinkiewiczResult q = marcinkiewicz_ratios(6, p, 20, 1);
        CHECK(std::isfinite(q.max_ratio));
        CHECK(q.min_ratio > 0.0);
    }
    CHECK_THROWS_AS((void)marcinkiewicz_ratios(4, 0.5, 10, 1), Error);
    CHECK_THROWS_AS((void)marcinkiewicz_ratios(4, kInfinity, 10, 1), Error);
    CHECK_THROWS_AS((void)marcinkiewicz_ratios(4, 2.0, 0, 1), Error);
}

TEST_CASE("constant polynomial has ratio one") {
    OrthoExpansion one(6);
    one.coeff(0, 0) = 1.0;
    for (double p : {1.0, 2.0, 3.5}) CHECK(marcinkiewicz_ratio(one, p) == 1.0);
}

TEST_CASE("convergence study on a polynomial") {
    const TestFunction poly{"poly", [](const Point& x) { return 1 + x.x1 * x.x2 - 2 * x.x1 * x.x1 * x.x1; }, "cubic"};
    const ConvergenceReport r = convergence_study(poly, 2.0, {3, 5, 8}, EvalGrid(40));
    REQUIRE(r.rows.size() == 3);
    CHECK(r.quadrature_m == 32);
    for (const ConvergenceRow& row : r.rows) {
        CHECK(row.error_wp <= 1e-8);
        CHECK(row.error_uniform <= 1e-8);
        CHECK(row.en_proxy <= 1e-8);
        CHECK(row.lebesgue_estimate >= 1.0);
    }
    CHECK_THROWS_AS((void)convergence_study(poly, 2.0, {5, 3}, EvalGrid(10)), Error);
    CHECK_THROWS_AS((void)convergence_study(poly, 2.0, {}, EvalGrid(10)), Error);
}

TEST_CASE("builtin functions") {
    for (const char* name : {"const", "coord1", "franke", "exp_sum", "abs_diag", "runge2d"}) {
        const TestFunction* f = find_builtin(name);
        REQUIRE(f != nullptr);
        CHECK(std::isfinite(f->evaluate({0.3, -0.7})));
    }
    CHECK(find_builtin("nope") == nullptr);
    CHECK(find_builtin("exp_sum")->evaluate({0.2, 0.3}) == doctest::Approx(std::exp(0.5)));
    CHECK(find_builtin("abs_diag")->evaluate({0.2, 0.5}) == doctest::Approx(0.3));
    CHECK(find_builtin("runge2d")->evaluate({0.5, 0.0}) == doctest::Approx(0.2));
    // Franke's function at the unit-square centre
    CHECK(find_builtin("franke")->evaluate({0.0, 0.0}) == doctest::Approx(franke_unit(0.5, 0.5)));
    CHECK(franke_unit(0.5, 0.5) == doctest::Approx(0.3257620892806842).epsilon(1e-14));
}
