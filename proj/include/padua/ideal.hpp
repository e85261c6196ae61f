// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "padua/dense.hpp"
#include "padua/point.hpp"

namespace padua {

/// Q_k^{n+1}: for k = 0, T_{n+1}(x1) - T_{n-1}(x1); for 1 <= k <= n+1,
/// T_{n-k+1}(x1) T_k(x2) + T_{n-k+1}(x2) T_{k-1}(x1). These generate the
/// ideal of polynomials vanishing on Pad_n.
[[nodiscard]] double q_poly(int n, int k, const Point& x);

/// R_j^{n-1} = U_j(x1) U_{n-j-1}(x2) + U_{n-j-2}(x1) U_j(x2), with U_{-1} = 0.
/// Vanishes on the interior Padua points. Requires n >= 2, 0 <= j <= n-1.
[[nodiscard]] double mp_poly(int n, int j, const Point& x);

/// [sqrt2 Q_0, 2 Q_1, ..., 2 Q_n, sqrt2 Q_{n+1}] (all of degree n+1).
struct QVector {
    int degree = 0;
    std::vector<double> values;
};

[[nodiscard]] QVector q_vector(int n, const Point& x);

/// Christoffel-Darboux matrices A_{n,1}, A_{n,2} ((n+1)x(n+2)) and the
/// three-term coefficients Gamma_1 ((n+2)x(n+1)), Gamma_2 ((n+2)xn) for which
/// x_i P_n = A_{n,i} P_{n+1} + ... and Q_{n+1} = P_{n+1} + Gamma_1 P_n + Gamma_2 P_{n-1}.
struct StructMatrices {
    int degree = 0;
    DenseMatrix a1;
    DenseMatrix a2;
    DenseMatrix g1;
    DenseMatrix g2;
};

/// Requires n >= 2.
[[nodiscard]] StructMatrices struct_matrices(int n);

/// max-norm of Q_{n+1}(x) - (P_{n+1}(x) + Gamma_1 P_n(x) + Gamma_2 P_{n-1}(x)).
[[nodiscard]] double three_term_residual(int n, const Point& x);

/// The three pieces of (x_i - y_i) K_n(x, y) after substituting the
/// three-term relation into the Christoffel-Darboux formula.
struct STerms {
    double s1 = 0.0; // Q^t(x) A^t P_n(y) - P_n^t(x) A Q(y)
    double s2 = 0.0; // P_n^t(x) (A Gamma_1 - Gamma_1^t A^t) P_n(y)
    double s3 = 0.0; // P_n^t(x) A Gamma_2 P_{n-1}(y) - P_{n-1}^t(x) Gamma_2^t A^t P_n(y)
};

[[nodiscard]] STerms s_terms(int n, int axis, const Point& x, const Point& y);

/// |(x_i - y_i) K*_n(x, y) - RHS_i| for the modified-kernel identity on axis i,
/// K*_n evaluated by the direct double sum. Requires n >= 2, axis in {1, 2}.
[[nodiscard]] double cd_residual(int n, int axis, const Point& x, const Point& y);

} // namespace padua
