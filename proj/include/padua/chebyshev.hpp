// SPDX-License-Identifier: MIT
#pragma once

#include <span>
#include <vector>

#include "padua/point.hpp"

namespace padua {

// Chebyshev polynomials on [-1,1], evaluated through x = cos(theta).
// Arguments with |x| > 1 raise ErrorKind::Domain; negative indices raise
// ErrorKind::Index.

[[nodiscard]] double cheb_t(int k, double x);
[[nodiscard]] double cheb_u(int k, double x);

/// Orthonormal first-kind polynomial for the Chebyshev weight:
/// 1 for k = 0 and sqrt(2) T_k(x) otherwise.
[[nodiscard]] double cheb_t_norm(int k, double x);

/// Writes T~_0(x) .. T~_{out.size()-1}(x) into out.
void cheb_t_norm_table(double x, std::span<double> out);

/// Row of degree-n orthonormal product polynomials at a point,
/// entry j = T~_{n-j}(x1) T~_j(x2).
struct BasisVector {
    int degree = 0;
    std::vector<double> values;
};

[[nodiscard]] BasisVector basis_vector(int n, const Point& x);

/// A polynomial of total degree <= n written in the orthonormal basis
/// P_j^k = T~_{k-j}(x1) T~_j(x2). Coefficient (k, j) lives at k(k+1)/2 + j.
class OrthoExpansion {
public:
    OrthoExpansion() = default;
    explicit OrthoExpansion(int degree);
    OrthoExpansion(int degree, std::vector<double> coefficients);

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] std::span<const double> coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] double& coeff(int k, int j);
    [[nodiscard]] double coeff(int k, int j) const;
    [[nodiscard]] double max_abs_coefficient() const;

    [[nodiscard]] double operator()(const Point& x) const;

    [[nodiscard]] static std::size_t size_for(int degree) {
        return static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 2) / 2;
    }

private:
    int degree_ = 0;
    std::vector<double> coeffs_{0.0};
};

} // namespace padua

namespace padua {

/// Values of e at every (xs1[a], xs2[b]), row-major (a outer). O(m n^2 + m^2 n).
[[nodiscard]] std::vector<double> evaluate_tensor(const OrthoExpansion& e, std::span<const double> xs1,
                                                  std::span<const double> xs2);

} // namespace padua
