// SPDX-License-Identifier: MIT
#include "padua/functions.hpp"

#include <cmath>
#include <vector>

namespace padua {

double franke_unit(double u, double v) {
    const double a = 9.0 * u, b = 9.0 * v;
    return 0.75 * std::exp(-((a - 2) * (a - 2) + (b - 2) * (b - 2)) / 4.0) +
           0.75 * std::exp(-(a + 1) * (a + 1) / 49.0 - (b + 1) / 10.0) +
           0.5 * std::exp(-((a - 7) * (a - 7) + (b - 3) * (b - 3)) / 4.0) -
           0.2 * std::exp(-(a - 4) * (a - 4) - (b - 7) * (b - 7));
}

std::span<const TestFunction> builtin_functions() {
    static const std::vector<TestFunction> registry{
        {"const", [](const Point&) { return 1.0; }, "constant"},
        {"coord1", [](const Point& x) { return x.x1; }, "linear"},
        // Franke's function pulled back from [0,1]^2.
        {"franke", [](const Point& x) { return franke_unit(0.5 * (x.x1 + 1.0), 0.5 * (x.x2 + 1.0)); }, "entire"},
        {"exp_sum", [](const Point& x) { return std::exp(x.x1 + x.x2); }, "entire"},
        {"abs_diag", [](const Point& x) { return std::abs(x.x1 - x.x2); }, "Lipschitz, kink on the diagonal"},
        {"runge2d", [](const Point& x) { return 1.0 / (1.0 + 16.0 * (x.x1 * x.x1 + x.x2 * x.x2)); },
         "analytic, poles at distance 1/4 from the square"},
    };
    return registry;
}

const TestFunction* find_builtin(std::string_view name) {
    for (const TestFunction& f : builtin_functions()) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

} // namespace padua
