// SPDX-License-Identifier: MIT
#pragma once

#include <span>
#include <string>
#include <string_view>

#include "padua/interp.hpp"

namespace padua {

struct TestFunction {
    std::string name;
    ScalarFunction evaluate;
    std::string smoothness_note;
};

/// const, coord1, franke, exp_sum, abs_diag, runge2d.
[[nodiscard]] std::span<const TestFunction> builtin_functions();

/// nullptr when the name is unknown.
[[nodiscard]] const TestFunction* find_builtin(std::string_view name);

/// Franke's four-Gaussian test function on [0,1]^2.
[[nodiscard]] double franke_unit(double u, double v);

} // namespace padua
