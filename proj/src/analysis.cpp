// SPDX-License-Identifier: MIT
#include "padua/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "padua/error.hpp"
#include "padua/summation.hpp"

namespace padua {

namespace {

void check_exponent(double p) {
    if (!(p > 0.0)) throw Error(ErrorKind::Argument, "exponent p must be positive, got " + std::to_string(p));
}

void check_quadrature(int m) {
    if (m < 16) throw Error(ErrorKind::Argument, "quadrature size m must be at least 16, got " + std::to_string(m));
}

std::vector<double> tensor_values(const ScalarFunction& f, std::span<const double> nodes) {
    const std::size_t m = nodes.size();
    std::vector<double> v(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) v[a * m + b] = f(Point{nodes[a], nodes[b]});
    return v;
}

} // namespace

std::vector<double> gauss_chebyshev_nodes(int m) {
    if (m < 1) throw Error(ErrorKind::Argument, "need at least one Gauss-Chebyshev node");
    std::vector<double> x(m);
    for (int i = 0; i < m; ++i) {
        x[i] = (2 * (2 * i + 1) == 2 * m) ? 0.0 : std::cos((2 * i + 1) * std::numbers::pi / (2 * m));
    }
    return x;
}

double discrete_lp(std::span<const double> values, double p) {
    check_exponent(p);
    if (values.empty()) return 0.0;
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    std::vector<double> powers(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) powers[i] = std::pow(std::abs(values[i]), p);
    return std::pow(pairwise_sum(powers) / static_cast<double>(values.size()), 1.0 / p);
}

double lp_norm(const ScalarFunction& f, double p, int m) {
    check_exponent(p);
    check_quadrature(m);
    const std::vector<double> nodes = gauss_chebyshev_nodes(m);
    return discrete_lp(tensor_values(f, nodes), p);
}

OrthoExpansion fourier_coefficients(int n, const ScalarFunction& f, int m) {
    check_degree(n);
    check_quadrature(m);
    const std::vector<double> nodes = gauss_chebyshev_nodes(m);
    const std::vector<double> values = tensor_values(f, nodes);
    const std::size_t mm = nodes.size(), w = n + 1;
    std::vector<double> t(mm * w);
    for (std::size_t a = 0; a < mm; ++a) cheb_t_norm_table(nodes[a], std::span(t).subspan(a * w, w));

    // g[a][j] = sum_b f(a, b) T~_j(x_b)
    std::vector<double> g(mm * w, 0.0);
    for (std::size_t a = 0; a < mm; ++a)
        for (std::size_t b = 0; b < mm; ++b) {
            const double v = values[a * mm + b];
            for (std::size_t j = 0; j < w; ++j) g[a * w + j] += v * t[b * w + j];
        }

    OrthoExpansion e(n);
    const double scale = 1.0 / static_cast<double>(mm * mm);
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j) {
            double s = 0.0;
            for (std::size_t a = 0; a < mm; ++a) s += t[a * w + (k - j)] * g[a * w + j];
            e.coeff(k, j) = s * scale;
        }
    return e;
}

double fourier_partial_sum(int n, const ScalarFunction& f, const Point& x, int m) {
    if (m == 0) m = 4 * n + 16;
    return fourier_coefficients(n, f, m)(x);
}

OrthoExpansion random_expansion(int n, std::mt19937_64& rng) {
    OrthoExpansion e(n);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j) e.coeff(k, j) = coef(rng);
    return e;
}

namespace {

void check_marcinkiewicz_exponent(double p) {
    if (!(p >= 1.0) || std::isinf(p)) {
        throw Error(ErrorKind::Argument, "Marcinkiewicz ratios need 1 <= p < inf, got " + std::to_string(p));
    }
}

double ratio_at(const OrthoExpansion& e, double p, std::span<const Point> nodes, std::span<const double> quad) {
    std::vector<double> at_nodes(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) at_nodes[i] = e(nodes[i]);
    const double discrete = std::pow(discrete_lp(at_nodes, p), p);
    const double continuous = std::pow(discrete_lp(evaluate_tensor(e, quad, quad), p), p);
    return discrete / continuous;
}

std::vector<Point> node_points(const PaduaSet& set) {
    std::vector<Point> nodes;
    nodes.reserve(set.size());
    for (const PaduaPoint& q : set.points()) nodes.push_back(q.x);
    return nodes;
}

} // namespace

double marcinkiewicz_ratio(const OrthoExpansion& e, double p) {
    check_marcinkiewicz_exponent(p);
    const int n = std::max(e.degree(), 1);
    return ratio_at(e, p, node_points(generate(n)), gauss_chebyshev_nodes(4 * n + 16));
}

MarcinkiewiczResult marcinkiewicz_ratios(int n, double p, int trials, std::uint64_t seed) {
    check_marcinkiewicz_exponent(p);
    if (trials < 1) throw Error(ErrorKind::Argument, "trials must be at least 1");
    const std::vector<Point> nodes = node_points(generate(n));
    const std::vector<double> quad = gauss_chebyshev_nodes(4 * n + 16);

    MarcinkiewiczResult r{n, p, trials, seed, 0.0, 0.0, {}};
    r.ratios.reserve(trials);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) r.ratios.push_back(ratio_at(random_expansion(n, rng), p, nodes, quad));
    r.min_ratio = *std::min_element(r.ratios.begin(), r.ratios.end());
    r.max_ratio = *std::max_element(r.ratios.begin(), r.ratios.end());
    return r;
}

ConvergenceReport convergence_study(const TestFunction& f, double p, const std::vector<int>& degrees,
                                    const EvalGrid& grid, KernelMethod method) {
    check_exponent(p);
    if (degrees.empty()) throw Error(ErrorKind::Argument, "convergence study needs at least one degree");
    for (std::size_t i = 1; i < degrees.size(); ++i) {
        if (degrees[i] <= degrees[i - 1]) throw Error(ErrorKind::Argument, "degrees must be strictly increasing");
    }
    ConvergenceReport report{f.name, p, grid.m(), grid.spacing(), std::max(16, 4 * degrees.back()), {}};

    const std::vector<double> quad = gauss_chebyshev_nodes(report.quadrature_m);
    std::vector<Point> quad_points;
    quad_points.reserve(quad.size() * quad.size());
    for (double a : quad)
        for (double b : quad) quad_points.push_back(Point{a, b});
    const std::vector<double> f_quad = tensor_values(f.evaluate, quad);

    std::vector<Point> grid_points(grid.size());
    std::vector<double> f_grid(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid_points[i] = grid.node(i);
        f_grid[i] = f.evaluate(grid_points[i]);
    }

    for (int n : degrees) {
        const PaduaSet set = generate(n);
        const SampleVector samples = sample(set, f.evaluate);
        const LagrangeBasis basis(set, method);
        ConvergenceRow row{n, set.size(), 0.0, 0.0, 0.0, 0.0};

        std::vector<double> diff = interpolate_points(basis, samples.values, quad_points);
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= f_quad[i];
        row.error_wp = discrete_lp(diff, p);

        const auto total = static_cast<long long>(grid.size());
        std::vector<double> err(grid.size()), leb(grid.size());
#pragma omp parallel
        {
            std::vector<double> ell(basis.size());
#pragma omp for schedule(dynamic, 64)
            for (long long i = 0; i < total; ++i) {
                basis.evaluate(grid_points[i], ell);
                double s = 0.0, a = 0.0;
                for (std::size_t q = 0; q < ell.size(); ++q) {
                    s += samples.values[q] * ell[q];
                    a += std::abs(ell[q]);
                }
                err[i] = std::abs(s - f_grid[i]);
                leb[i] = a;
            }
        }
        row.error_uniform = *std::max_element(err.begin(), err.end());
        row.lebesgue_estimate = *std::max_element(leb.begin(), leb.end());

        const OrthoExpansion sn = fourier_coefficients(n, f.evaluate, 4 * n + 16);
        const std::vector<double> sn_grid = evaluate_tensor(sn, grid.axis(), grid.axis());
        double proxy = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) proxy = std::max(proxy, std::abs(f_grid[i] - sn_grid[i]));
        row.en_proxy = proxy;

        report.rows.push_back(row);
    }
    return report;
}

} // namespace padua
