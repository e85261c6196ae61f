// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace padua {

enum class ErrorKind {
    Domain,     // argument outside [-1,1] or [-1,1]^2
    Degree,     // unsupported or too large degree
    Index,      // polynomial or node index out of range
    Ambiguous,  // more than one match within tolerance
    Length,     // sample vector length does not match the point set
    Argument,   // any other invalid parameter
    Evaluation, // user function failed at a node
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Largest degree accepted by the set-building and kernel operations.
inline constexpr int kMaxDegree = 4096;

/// Throws ErrorKind::Degree unless 0 <= n <= kMaxDegree.
void check_degree(int n);

} // namespace padua
