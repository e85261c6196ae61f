// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "padua/chebyshev.hpp"
#include "padua/ideal.hpp"
#include "padua/kernel.hpp"
#include "padua/padua_set.hpp"

using namespace padua;

TEST_CASE("Q_k vanish on the Padua points") {
    for (int n = 1; n <= 128; n += (n < 16 ? 1 : 7)) {
        double worst = 0.0;
        for (const PaduaSet set = generate(n); const PaduaPoint& p : set.points()) {
            for (int k = 0; k <= n + 1; ++k) worst = std::max(worst, std::abs(q_poly(n, k, p.x)));
        }
        CHECK(worst <= 1e-9 * (n + 1));
    }
}

TEST_CASE("Q_0 closed form") {
    std::mt19937_64 rng(3);
    for (int n : {1, 2, 7, 20}) {
        for (int t = 0; t < 50; ++t) {
            const Point x = oracle::random_point(rng);
            const double closed = -2.0 * (1.0 - x.x1 * x.x1) * oracle::cheb_u(n - 1, x.x1);
            CHECK(std::abs(q_poly(n, 0, x) - closed) <= 1e-12);
        }
    }
}

TEST_CASE("R_j vanish on the interior points") {
    for (int n = 2; n <= 30; ++n) {
        double worst = 0.0;
        for (const PaduaSet set = generate(n); const PaduaPoint& p : set.points()) {
            if (p.cls != PointClass::Interior) continue;
            for (int j = 0; j <= n - 1; ++j) worst = std::max(worst, std::abs(mp_poly(n, j, p.x)));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("q_vector scaling and vanishing") {
    const Point x{0.3, -0.6};
    const int n = 5;
    const QVector q = q_vector(n, x);
    REQUIRE(q.values.size() == static_cast<std::size_t>(n + 2));
    CHECK(q.values.front() == doctest::Approx(std::numbers::sqrt2 * q_poly(n, 0, x)));
    CHECK(q.values.back() == doctest::Approx(std::numbers::sqrt2 * q_poly(n, n + 1, x)));
    for (int k = 1; k <= n; ++k) CHECK(q.values[k] == doctest::Approx(2.0 * q_poly(n, k, x)));
    for (const PaduaSet set = generate(n); const PaduaPoint& p : set.points()) {
        for (double v : q_vector(n, p.x).values) CHECK(std::abs(v) <= 1e-10);
    }
}

TEST_CASE("structure matrix stencils") {
    const int n = 4;
    const StructMatrices m = struct_matrices(n);
    REQUIRE(m.a1.rows() == 5);
    REQUIRE(m.a1.cols() == 6);
    REQUIRE(m.g1.rows() == 6);
    REQUIRE(m.g1.cols() == 5);
    REQUIRE(m.g2.rows() == 6);
    REQUIRE(m.g2.cols() == 4);
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 6; ++c) {
            const double a1 = r == c ? (r == 4 ? std::numbers::sqrt2 / 2 : 0.5) : 0.0;
            const double a2 = c == r + 1 ? (r == 0 ? std::numbers::sqrt2 / 2 : 0.5) : 0.0;
            CHECK(m.a1(r, c) == a1);
            CHECK(m.a2(r, c) == a2);
        }
    }
    CHECK(m.g2(0, 0) == -1.0);
    double others = 0.0;
    for (std::size_t r = 0; r < 6; ++r) {
        for (std::size_t c = 0; c < 4; ++c) others += (r || c) ? std::abs(m.g2(r, c)) : 0.0;
    }
    CHECK(others == 0.0);
}

TEST_CASE("A2 Gamma2 = 0 and A1 Gamma1 symmetric") {
    for (int n = 2; n <= 20; ++n) {
        const StructMatrices m = struct_matrices(n);
        const DenseMatrix z = m.a2 * m.g2;
        for (std::size_t r = 0; r < z.rows(); ++r) {
            for (std::size_t c = 0; c < z.cols(); ++c) CHECK(z(r, c) == 0.0);
        }
        const DenseMatrix s = m.a1 * m.g1;
        CHECK(s == s.transpose());
    }
}

TEST_CASE("three-term relation") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 500; ++t) CHECK(three_term_residual(5, oracle::random_point(rng)) <= 1e-11);
    CHECK(three_term_residual(2, {1, -1}) <= 1e-12);
    for (int n = 2; n <= 32; ++n) {
        for (int t = 0; t < 20; ++t) CHECK(three_term_residual(n, oracle::random_point(rng)) <= 1e-10);
    }
}

TEST_CASE("Christoffel-Darboux identities for the modified kernel") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 100; ++t) {
        const Point x = oracle::random_point(rng), y = oracle::random_point(rng);
        CHECK(cd_residual(6, 1, x, y) <= 1e-9);
        CHECK(cd_residual(6, 1, x, x) <= 1e-10);
        CHECK(cd_residual(6, 2, x, x) <= 1e-10);
    }
    const PaduaSet s = generate(6);
    for (std::size_t i = 0; i < s.size(); i += 3) {
        for (std::size_t j = 1; j < s.size(); j += 5) CHECK(cd_residual(6, 2, s[i].x, s[j].x) <= 1e-9);
    }
}

TEST_CASE("S-term identities") {
    std::mt19937_64 rng(23);
    for (int n : {2, 3, 8, 15}) {
        for (int t = 0; t < 50; ++t) {
            const Point x = oracle::random_point(rng), y = oracle::random_point(rng);
            const double tx1 = cheb_t(n, x.x1), ty1 = cheb_t(n, y.x1);
            const STerms s1 = s_terms(n, 1, x, y);
            const double expect31 =
                (x.x1 - y.x1) * tx1 * ty1 + 0.5 * tx1 * q_poly(n, 0, y) - 0.5 * ty1 * q_poly(n, 0, x);
            CHECK(std::abs(s1.s3 - expect31) <= 1e-10);
            const STerms s2 = s_terms(n, 2, x, y);
            const double expect22 = tx1 * cheb_t(n, y.x2) - cheb_t(n, x.x2) * ty1;
            CHECK(std::abs(s2.s2 - expect22) <= 1e-10);
        }
    }
}
