// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string_view>

namespace padua {

/// Parses a PADUA_THREADS value; empty, non-numeric or non-positive gives nullopt.
[[nodiscard]] std::optional<int> parse_thread_count(std::string_view text);

/// Applies PADUA_THREADS (if set and valid) to the OpenMP runtime.
/// Returns the thread cap in effect.
int apply_thread_env();

[[nodiscard]] int max_threads();

} // namespace padua
