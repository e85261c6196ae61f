// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

#include "padua/interp.hpp"
#include "padua/padua_set.hpp"

namespace padua {

/// K*_n(node, node) / (n(n+1)) per node class.
struct ClassFactors {
    double vertex = 2.0;
    double edge = 1.0;
    double interior = 0.5;

    [[nodiscard]] double operator()(PointClass c) const {
        return c == PointClass::Vertex ? vertex : (c == PointClass::Edge ? edge : interior);
    }
};

/// Degree 2n-1 rule for the normalized product Chebyshev weight
/// W = 1 / (pi^2 sqrt(1-x1^2) sqrt(1-x2^2)).
struct CubatureRule {
    int degree = 0;
    PaduaSet nodes;
    std::vector<double> weights; // aligned with nodes
};

/// Largest relative deviation |n(n+1) factor - K*_direct| / K*_direct over
/// min(N, samples) nodes drawn with the given seed.
[[nodiscard]] double weight_cross_check(const PaduaSet& set, const ClassFactors& factors, std::size_t samples = 50,
                                        std::uint64_t seed = 0x9ad0a5u);

/// Weights 1/K*_n(node, node) from the class factors. The factors are first
/// checked against direct kernel sums; a relative deviation above 1e-9
/// raises ErrorKind::Argument.
[[nodiscard]] CubatureRule build_rule(const PaduaSet& set, const ClassFactors& factors = {});

/// Weights 1 / (n(n+1) factor(class)) without the cross-check.
[[nodiscard]] CubatureRule assemble_rule(const PaduaSet& set, const ClassFactors& factors);

/// sum_i w_i values[i], pairwise summed.
[[nodiscard]] double integrate_values(const CubatureRule& rule, std::span<const double> values);

[[nodiscard]] double integrate(const CubatureRule& rule, const ScalarFunction& f);

} // namespace padua
