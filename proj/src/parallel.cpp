// SPDX-License-Identifier: MIT
#include "padua/parallel.hpp"

#include <cstdlib>

#include <omp.h>

namespace padua {

std::optional<int> parse_thread_count(std::string_view text) {
    if (text.empty()) return std::nullopt;
    int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
        if (value > 4096) return std::nullopt;
    }
    if (value <= 0) return std::nullopt;
    return value;
}

int apply_thread_env() {
    if (const char* env = std::getenv("PADUA_THREADS")) {
        if (const auto threads = parse_thread_count(env)) omp_set_num_threads(*threads);
    }
    return omp_get_max_threads();
}

int max_threads() { return omp_get_max_threads(); }

} // namespace padua
