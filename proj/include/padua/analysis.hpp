// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "padua/chebyshev.hpp"
#include "padua/functions.hpp"
#include "padua/interp.hpp"

namespace padua {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// cos((2i+1) pi / (2m)), i = 0..m-1. With equal weights 1/m this is the
/// m-point Gauss rule for the normalized weight 1/(pi sqrt(1-x^2)).
[[nodiscard]] std::vector<double> gauss_chebyshev_nodes(int m);

/// (sum |v|^p / count)^(1/p) with equal weights, or max |v| for p = inf.
[[nodiscard]] double discrete_lp(std::span<const double> values, double p);

/// ||f||_{W,p} by the m x m tensor Gauss-Chebyshev rule applied to |f|^p.
/// p > 0 (p = inf gives the maximum over the quadrature nodes); m >= 16.
[[nodiscard]] double lp_norm(const ScalarFunction& f, double p, int m = 200);

/// Coefficients a_j^k(f) = int f P_j^k W for k <= n, by the m x m tensor rule.
[[nodiscard]] OrthoExpansion fourier_coefficients(int n, const ScalarFunction& f, int m);

/// S_n f(x). m = 0 selects the default 4n + 16.
[[nodiscard]] double fourier_partial_sum(int n, const ScalarFunction& f, const Point& x, int m = 0);

/// Coefficients i.i.d. uniform on [-1, 1] in the orthonormal basis.
[[nodiscard]] OrthoExpansion random_expansion(int n, std::mt19937_64& rng);

struct MarcinkiewiczResult {
    int degree = 0;
    double p = 2.0;
    int trials = 0;
    std::uint64_t seed = 0;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    std::vector<double> ratios; // per trial
};

/// r(P) = [(1/N) sum_nodes |P|^p] / ||P||_{W,p}^p over the nodes of degree
/// max(1, deg P). Requires 1 <= p < inf.
[[nodiscard]] double marcinkiewicz_ratio(const OrthoExpansion& e, double p);

/// r(P) for `trials` random P of degree n.
/// Requires 1 <= p < inf and trials >= 1.
[[nodiscard]] MarcinkiewiczResult marcinkiewicz_ratios(int n, double p, int trials, std::uint64_t seed);

struct ConvergenceRow {
    int n = 0;
    std::size_t nodes = 0;
    double error_wp = 0.0;
    double error_uniform = 0.0;
    double lebesgue_estimate = 0.0;
    double en_proxy = 0.0; // ||f - S_n f|| on the evaluation grid, stands in for E_n(f)
};

struct ConvergenceReport {
    std::string function;
    double p = 2.0;
    int grid_m = 0;
    GridSpacing spacing = GridSpacing::Uniform;
    int quadrature_m = 0;
    std::vector<ConvergenceRow> rows; // sorted by n
};

/// Per degree: error_wp = ||L_n f - f||_{W,p} with m = max(16, 4 max(degrees)),
/// error_uniform and the Lebesgue estimate as grid maxima, en_proxy as above.
/// degrees must be nonempty and strictly increasing.
[[nodiscard]] ConvergenceReport convergence_study(const TestFunction& f, double p, const std::vector<int>& degrees,
                                                  const EvalGrid& grid, KernelMethod method = KernelMethod::Auto);

} // namespace padua
