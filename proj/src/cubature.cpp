// SPDX-License-Identifier: MIT
#include "padua/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "padua/error.hpp"
#include "padua/kernel.hpp"
#include "padua/summation.hpp"

namespace padua {

double weight_cross_check(const PaduaSet& set, const ClassFactors& factors, std::size_t samples, std::uint64_t seed) {
    const std::size_t count = set.size();
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (samples < count) {
        std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(set.degree()));
        for (std::size_t i = 0; i < samples; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, count - 1);
            std::swap(order[i], order[pick(rng)]);
        }
        order.resize(samples);
    }
    const double n = set.degree();
    double worst = 0.0;
    for (std::size_t i : order) {
        const PaduaPoint& p = set[i];
        const double direct = kernel_star(set.degree(), p.x, p.x, KernelMethod::Direct);
        worst = std::max(worst, std::abs(n * (n + 1.0) * factors(p.cls) - direct) / direct);
    }
    return worst;
}

CubatureRule build_rule(const PaduaSet& set, const ClassFactors& factors) {
    if (const double dev = weight_cross_check(set, factors); !(dev <= 1e-9)) {
        throw Error(ErrorKind::Argument, "class factors disagree with direct kernel values (relative deviation " +
                                             std::to_string(dev) + ")");
    }
    return assemble_rule(set, factors);
}

CubatureRule assemble_rule(const PaduaSet& set, const ClassFactors& factors) {
    CubatureRule rule{set.degree(), set, std::vector<double>(set.size())};
    const double n = set.degree();
    for (std::size_t i = 0; i < set.size(); ++i) rule.weights[i] = 1.0 / (n * (n + 1.0) * factors(set[i].cls));
    return rule;
}

double integrate_values(const CubatureRule& rule, std::span<const double> values) {
    if (values.size() != rule.weights.size()) {
        throw Error(ErrorKind::Length, "expected " + std::to_string(rule.weights.size()) + " values, got " +
                                           std::to_string(values.size()));
    }
    std::vector<double> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) terms[i] = rule.weights[i] * values[i];
    return pairwise_sum(terms);
}

double integrate(const CubatureRule& rule, const ScalarFunction& f) {
    return integrate_values(rule, sample(rule.nodes, f).values);
}

} // namespace padua
