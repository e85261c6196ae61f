// SPDX-License-Identifier: MIT
#include "padua/interp.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "padua/error.hpp"

namespace padua {

std::string_view to_string(GridSpacing s) {
    return s == GridSpacing::Uniform ? "uniform" : "chebyshev";
}

EvalGrid::EvalGrid(int m, GridSpacing spacing) : m_(m), spacing_(spacing) {
    if (m < 2) throw Error(ErrorKind::Argument, "grid needs at least 2 points per axis, got " + std::to_string(m));
    axis_.resize(m);
    for (int i = 0; i < m; ++i) {
        if (spacing == GridSpacing::Uniform) {
            axis_[i] = (i == m - 1) ? 1.0 : -1.0 + 2.0 * i / (m - 1);
        } else {
            axis_[i] = -std::cos((2 * i + 1) * std::numbers::pi / (2 * m));
        }
    }
}

namespace {

void check_samples(const PaduaSet& set, std::span<const double> samples) {
    if (samples.size() != set.size()) {
        throw Error(ErrorKind::Length, "sample vector has " + std::to_string(samples.size()) + " values, set has " +
                                           std::to_string(set.size()) + " nodes");
    }
}

double weighted_sum(std::span<const double> ell, std::span<const double> samples) {
    double s = 0.0;
    for (std::size_t i = 0; i < ell.size(); ++i) s += samples[i] * ell[i];
    return s;
}

double abs_sum(std::span<const double> ell) {
    double s = 0.0;
    for (double v : ell) s += std::abs(v);
    return s;
}

} // namespace

SampleVector sample(const PaduaSet& set, const ScalarFunction& f) {
    SampleVector out{set.degree(), std::vector<double>(set.size())};
    for (std::size_t i = 0; i < set.size(); ++i) {
        const PaduaPoint& p = set[i];
        const auto where = [&] {
            return "node (" + std::to_string(p.k) + ", " + std::to_string(p.j) + ") at (" + std::to_string(p.x.x1) +
                   ", " + std::to_string(p.x.x2) + ")";
        };
        double v = 0.0;
        try {
            v = f(p.x);
        } catch (const std::exception& e) {
            throw Error(ErrorKind::Evaluation, "function failed at " + where() + ": " + e.what());
        }
        if (!std::isfinite(v)) throw Error(ErrorKind::Evaluation, "function is not finite at " + where());
        out.values[i] = v;
    }
    return out;
}

double interpolate(const PaduaSet& set, const SampleVector& samples, const Point& x, KernelMethod method) {
    check_samples(set, samples.values);
    check_in_square(x);
    double s = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        s += samples.values[i] * fundamental_poly(set, {set[i].k, set[i].j}, x, method);
    }
    return s;
}

double interpolate(const LagrangeBasis& basis, std::span<const double> samples, const Point& x) {
    check_samples(basis.set(), samples);
    std::vector<double> ell(basis.size());
    basis.evaluate(x, ell);
    return weighted_sum(ell, samples);
}

GridValues interpolate_grid_serial(const PaduaSet& set, const SampleVector& samples, const EvalGrid& grid,
                                   KernelMethod method) {
    check_samples(set, samples.values);
    const LagrangeBasis basis(set, method);
    GridValues out{grid.m(), std::vector<double>(grid.size())};
    std::vector<double> ell(basis.size());
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        basis.evaluate(grid.node(idx), ell);
        out.values[idx] = weighted_sum(ell, samples.values);
    }
    return out;
}

GridValues interpolate_grid(const PaduaSet& set, const SampleVector& samples, const EvalGrid& grid,
                            KernelMethod method) {
    check_samples(set, samples.values);
    const LagrangeBasis basis(set, method);
    GridValues out{grid.m(), std::vector<double>(grid.size())};
    const auto total = static_cast<long long>(grid.size());
#pragma omp parallel
    {
        std::vector<double> ell(basis.size());
#pragma omp for schedule(dynamic, 64)
        for (long long idx = 0; idx < total; ++idx) {
            basis.evaluate(grid.node(static_cast<std::size_t>(idx)), ell);
            out.values[idx] = weighted_sum(ell, samples.values);
        }
    }
    return out;
}

std::vector<double> interpolate_points(const LagrangeBasis& basis, std::span<const double> samples,
                                       std::span<const Point> points) {
    check_samples(basis.set(), samples);
    std::vector<double> out(points.size());
    const auto total = static_cast<long long>(points.size());
#pragma omp parallel
    {
        std::vector<double> ell(basis.size());
#pragma omp for schedule(dynamic, 64)
        for (long long idx = 0; idx < total; ++idx) {
            basis.evaluate(points[idx], ell);
            out[idx] = weighted_sum(ell, samples);
        }
    }
    return out;
}

double lebesgue_function(const PaduaSet& set, const Point& x, KernelMethod method) {
    check_in_square(x);
    double s = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) s += std::abs(fundamental_poly(set, {set[i].k, set[i].j}, x, method));
    return s;
}

double lebesgue_function(const LagrangeBasis& basis, const Point& x) {
    std::vector<double> ell(basis.size());
    basis.evaluate(x, ell);
    return abs_sum(ell);
}

LebesgueEstimate lebesgue_constant_serial(const PaduaSet& set, const EvalGrid& grid, KernelMethod method) {
    const LagrangeBasis basis(set, method);
    std::vector<double> ell(basis.size());
    double best = -1.0;
    std::size_t best_idx = 0;
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        basis.evaluate(grid.node(idx), ell);
        const double v = abs_sum(ell);
        if (v > best) {
            best = v;
            best_idx = idx;
        }
    }
    return {best, grid.node(best_idx), grid.m(), grid.spacing()};
}

LebesgueEstimate lebesgue_constant(const PaduaSet& set, const EvalGrid& grid, KernelMethod method) {
    const LagrangeBasis basis(set, method);
    const auto total = static_cast<long long>(grid.size());
    double best = -1.0;
    long long best_idx = 0;
#pragma omp parallel
    {
        std::vector<double> ell(basis.size());
        double local_best = -1.0;
        long long local_idx = 0;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long idx = 0; idx < total; ++idx) {
            basis.evaluate(grid.node(static_cast<std::size_t>(idx)), ell);
            const double v = abs_sum(ell);
            if (v > local_best) {
                local_best = v;
                local_idx = idx;
            }
        }
#pragma omp critical(padua_lebesgue_max)
        {
            if (local_best > best || (local_best == best && local_idx < best_idx)) {
                best = local_best;
                best_idx = local_idx;
            }
        }
    }
    return {best, grid.node(static_cast<std::size_t>(best_idx)), grid.m(), grid.spacing()};
}

} // namespace padua
