// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>

namespace padua {

struct Point {
    double x1 = 0.0;
    double x2 = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

[[nodiscard]] inline double max_norm_distance(const Point& a, const Point& b) {
    return std::max(std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2));
}

[[nodiscard]] inline bool in_square(const Point& p) {
    return std::abs(p.x1) <= 1.0 && std::abs(p.x2) <= 1.0;
}

/// Throws ErrorKind::Domain when p is outside [-1,1]^2.
void check_in_square(const Point& p);

} // namespace padua
