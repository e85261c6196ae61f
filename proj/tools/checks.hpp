// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "padua/cubature.hpp"
#include "padua/point.hpp"

namespace padua::checks {

/// Uniform random point in the square.
[[nodiscard]] Point random_point(std::mt19937_64& rng);

/// Pairs (x, y) for which at least one |cos a - cos b| in the closed-form
/// kernel falls inside or near the singular band: coincident points, tiny
/// offsets, shared coordinates and pairs with theta sums matched across axes.
[[nodiscard]] std::vector<std::pair<Point, Point>> guard_band_pairs(std::mt19937_64& rng, std::size_t count);

/// max_{i,j} |l_i(x_j) - delta_ij| through LagrangeBasis (Auto).
[[nodiscard]] double delta_deviation(const PaduaSet& set);

/// max over a + b <= 2n - 1 of |sum w T_a T_b - delta_a0 delta_b0|.
[[nodiscard]] double exactness_deviation(const CubatureRule& rule);

/// max |Q_k^{n+1}| over all nodes and k.
[[nodiscard]] double ideal_deviation(const PaduaSet& set);

struct DegreeResult {
    int degree = 0;
    double observed = 0.0;
    double tolerance = 0.0;
    [[nodiscard]] bool pass() const { return observed <= tolerance; }
};

struct CheckResult {
    std::string name;
    std::string tolerance_rule;
    std::vector<DegreeResult> degrees;
    [[nodiscard]] bool pass() const;
    [[nodiscard]] double max_observed() const;
};

struct VerifyOptions {
    int max_degree = 16;
    std::uint64_t seed = 0;
    ClassFactors factors; // test hook: altered factors must fail
};

struct VerifyReport {
    int max_degree = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    [[nodiscard]] bool pass() const;
};

/// Runs every consistency check for degrees 1..max_degree.
[[nodiscard]] VerifyReport run_verify(const VerifyOptions& options);

} // namespace padua::checks
