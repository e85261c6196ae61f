// SPDX-License-Identifier: MIT
#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "padua/chebyshev.hpp"
#include "padua/error.hpp"
#include "padua/ideal.hpp"
#include "padua/kernel.hpp"
#include "padua/padua_set.hpp"

namespace padua::checks {

namespace {

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

// Independent streams per check and degree so checks can be reordered freely.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t check, int degree) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(check), static_cast<std::uint32_t>(degree)};
    return std::mt19937_64(seq);
}

} // namespace

Point random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double a = u(rng);
    return Point{a, u(rng)};
}

std::vector<std::pair<Point, Point>> guard_band_pairs(std::mt19937_64& rng, std::size_t count) {
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> tiny(-1e-8, 1e-8);
    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Point x = random_point(rng);
        Point y = x;
        switch (i % 5) {
        case 0:
            break;
        case 1:
            y = Point{clamp_unit(x.x1 + tiny(rng)), clamp_unit(x.x2 + tiny(rng))};
            break;
        case 2:
            y.x2 = random_point(rng).x2;
            break;
        case 3:
            y.x1 = random_point(rng).x1;
            break;
        default: {
            // theta1(x) + theta1(y) = theta2(x) + theta2(y) up to a tiny shift
            for (;;) {
                const double t1x = angle(rng), t2x = angle(rng), t1y = angle(rng);
                const double t2y = t1x + t1y - t2x + tiny(rng);
                if (t2y < 0.0 || t2y > std::numbers::pi) continue;
                pairs.emplace_back(Point{std::cos(t1x), std::cos(t2x)}, Point{std::cos(t1y), std::cos(t2y)});
                break;
            }
            continue;
        }
        }
        pairs.emplace_back(x, y);
    }
    return pairs;
}

double delta_deviation(const PaduaSet& set) {
    const LagrangeBasis basis(set);
    std::vector<double> values(set.size());
    double worst = 0.0;
    for (std::size_t j = 0; j < set.size(); ++j) {
        basis.evaluate(set[j].x, values);
        for (std::size_t i = 0; i < set.size(); ++i) {
            worst = std::max(worst, std::abs(values[i] - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double exactness_deviation(const CubatureRule& rule) {
    const int n = rule.degree;
    const std::size_t count = rule.weights.size();
    // T_a at each node coordinate, a = 0..2n-1
    std::vector<std::vector<double>> t1(2 * n), t2(2 * n);
    for (int a = 0; a < 2 * n; ++a) {
        t1[a].resize(count);
        t2[a].resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            t1[a][i] = cheb_t(a, rule.nodes[i].x.x1);
            t2[a][i] = cheb_t(a, rule.nodes[i].x.x2);
        }
    }
    std::vector<double> values(count);
    double worst = 0.0;
    for (int a = 0; a < 2 * n; ++a) {
        for (int b = 0; a + b <= 2 * n - 1; ++b) {
            for (std::size_t i = 0; i < count; ++i) values[i] = t1[a][i] * t2[b][i];
            const double exact = (a == 0 && b == 0) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(integrate_values(rule, values) - exact));
        }
    }
    return worst;
}

double ideal_deviation(const PaduaSet& set) {
    const int n = set.degree();
    double worst = 0.0;
    for (const PaduaPoint& p : set.points()) {
        for (int k = 0; k <= n + 1; ++k) worst = std::max(worst, std::abs(q_poly(n, k, p.x)));
    }
    return worst;
}

bool CheckResult::pass() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeResult& d) { return d.pass(); });
}

double CheckResult::max_observed() const {
    double worst = 0.0;
    for (const DegreeResult& d : degrees) worst = std::max(worst, d.observed);
    return worst;
}

bool VerifyReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

VerifyReport run_verify(const VerifyOptions& options) {
    check_degree(options.max_degree);
    VerifyReport report{options.max_degree, options.seed, {}};
    const int top = options.max_degree;
    constexpr std::size_t kRandomPairs = 200;
    constexpr std::size_t kBandPairs = 50;

    CheckResult cardinality{"cardinality", "|N - (n+1)(n+2)/2| = 0", {}};
    CheckResult curve{"generating_curve", "max |T_n(x1) + T_{n+1}(x2)| at nodes <= 1e-12 (n+1)^2", {}};
    CheckResult curve_set{"curve_points_match_set", "curve points not found in set = 0", {}};
    CheckResult ideal{"ideal_vanishing", "max |Q_k^{n+1}| at nodes <= 1e-9 (n+1)", {}};
    CheckResult three_term{"three_term_relation", "<= 1e-10 at 200 random points, n >= 2", {}};
    CheckResult cd{"christoffel_darboux", "both axes <= 1e-9 at 200 random pairs, n >= 2", {}};
    CheckResult kernel_eq{"kernel_equivalence", "|compact - direct| <= 1e-9 (n+1), random and guard-band pairs", {}};
    CheckResult delta{"delta_property", "max |l_i(x_j) - delta_ij| <= 1e-9", {}};
    CheckResult node_values{"node_values", "max relative |n(n+1) factor(class) - K*_direct| <= 1e-9", {}};
    CheckResult exactness{"cubature_exactness", "max |Q(T_a T_b) - I(T_a T_b)|, a+b <= 2n-1, <= 1e-10", {}};

    for (int n = 1; n <= top; ++n) {
        const PaduaSet set = generate(n);
        const double scale = n + 1.0;

        cardinality.degrees.push_back(
            {n, std::abs(static_cast<double>(set.size()) - static_cast<double>(PaduaSet::cardinality(n))), 0.0});

        double residual = 0.0;
        for (const PaduaPoint& p : set.points()) residual = std::max(residual, std::abs(curve_residual(n, p.x)));
        curve.degrees.push_back({n, residual, 1e-12 * scale * scale});

        double missing = 0.0;
        const std::vector<Point> on_curve = generating_curve_points(n);
        for (const Point& p : on_curve) {
            if (!find_index(set, p, 1e-10)) missing += 1.0;
        }
        missing += std::abs(static_cast<double>(on_curve.size()) - static_cast<double>(set.size()));
        curve_set.degrees.push_back({n, missing, 0.0});

        ideal.degrees.push_back({n, ideal_deviation(set), 1e-9 * scale});

        if (n >= 2) {
            auto rng = stream(options.seed, 1, n);
            double tt = 0.0, cdr = 0.0;
            for (std::size_t i = 0; i < kRandomPairs; ++i) {
                const Point x = random_point(rng), y = random_point(rng);
                tt = std::max(tt, three_term_residual(n, x));
                cdr = std::max({cdr, cd_residual(n, 1, x, y), cd_residual(n, 2, x, y)});
            }
            three_term.degrees.push_back({n, tt, 1e-10});
            cd.degrees.push_back({n, cdr, 1e-9});
        }

        {
            auto rng = stream(options.seed, 2, n);
            double worst = 0.0;
            const auto compare = [&](const Point& x, const Point& y) {
                worst = std::max(worst, std::abs(kernel(n, x, y, KernelMethod::Compact) - kernel_direct(n, x, y)));
            };
            for (std::size_t i = 0; i < kRandomPairs; ++i) {
                const Point x = random_point(rng), y = random_point(rng);
                compare(x, y);
            }
            for (const auto& [x, y] : guard_band_pairs(rng, kBandPairs)) compare(x, y);
            kernel_eq.degrees.push_back({n, worst, 1e-9 * scale});
        }

        delta.degrees.push_back({n, delta_deviation(set), 1e-9});
        node_values.degrees.push_back({n, weight_cross_check(set, options.factors, set.size()), 1e-9});
        exactness.degrees.push_back({n, exactness_deviation(assemble_rule(set, options.factors)), 1e-10});
    }

    report.checks = {cardinality, curve, curve_set, ideal, three_term, cd, kernel_eq, delta, node_values, exactness};
    return report;
}

} // namespace padua::checks
