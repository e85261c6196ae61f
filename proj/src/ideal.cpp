// SPDX-License-Identifier: MIT
#include "padua/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "padua/chebyshev.hpp"
#include "padua/error.hpp"
#include "padua/kernel.hpp"

namespace padua {

namespace {

void check_ideal_degree(int n, int min_degree) {
    if (n < min_degree || n > kMaxDegree) {
        throw Error(ErrorKind::Degree, "unsupported degree " + std::to_string(n) + " (need " +
                                           std::to_string(min_degree) + ".." + std::to_string(kMaxDegree) + ")");
    }
}

} // namespace

double q_poly(int n, int k, const Point& x) {
    check_ideal_degree(n, 1);
    if (k < 0 || k > n + 1) {
        throw Error(ErrorKind::Index, "Q index " + std::to_string(k) + " outside 0.." + std::to_string(n + 1));
    }
    check_in_square(x);
    if (k == 0) return cheb_t(n + 1, x.x1) - cheb_t(n - 1, x.x1);
    return cheb_t(n - k + 1, x.x1) * cheb_t(k, x.x2) + cheb_t(n - k + 1, x.x2) * cheb_t(k - 1, x.x1);
}

double mp_poly(int n, int j, const Point& x) {
    check_ideal_degree(n, 2);
    if (j < 0 || j > n - 1) {
        throw Error(ErrorKind::Index, "R index " + std::to_string(j) + " outside 0.." + std::to_string(n - 1));
    }
    check_in_square(x);
    const double first = cheb_u(j, x.x1) * cheb_u(n - j - 1, x.x2);
    const double second = (n - j - 2 < 0) ? 0.0 : cheb_u(n - j - 2, x.x1) * cheb_u(j, x.x2);
    return first + second;
}

QVector q_vector(int n, const Point& x) {
    check_ideal_degree(n, 1);
    QVector q{n, std::vector<double>(n + 2)};
    for (int k = 0; k <= n + 1; ++k) {
        const double scale = (k == 0 || k == n + 1) ? std::numbers::sqrt2 : 2.0;
        q.values[k] = scale * q_poly(n, k, x);
    }
    return q;
}

StructMatrices struct_matrices(int n) {
    check_ideal_degree(n, 2);
    const double half_sqrt2 = std::numbers::sqrt2 / 2.0;
    StructMatrices m{n, DenseMatrix(n + 1, n + 2), DenseMatrix(n + 1, n + 2), DenseMatrix(n + 2, n + 1),
                     DenseMatrix(n + 2, n)};
    for (int r = 0; r <= n; ++r) {
        m.a1(r, r) = (r < n) ? 0.5 : half_sqrt2;
        m.a2(r, r + 1) = (r > 0) ? 0.5 : half_sqrt2;
    }
    m.g1(1, n) = std::numbers::sqrt2;
    for (int r = 2; r <= n + 1; ++r) m.g1(r, n + 1 - r) = 1.0;
    m.g2(0, 0) = -1.0;
    return m;
}

double three_term_residual(int n, const Point& x) {
    const StructMatrices m = struct_matrices(n);
    const QVector q = q_vector(n, x);
    const BasisVector p1 = basis_vector(n + 1, x);
    const BasisVector p0 = basis_vector(n, x);
    const BasisVector pm = basis_vector(n - 1, x);
    const std::vector<double> g1p = m.g1.apply(p0.values);
    const std::vector<double> g2p = m.g2.apply(pm.values);
    double worst = 0.0;
    for (int r = 0; r <= n + 1; ++r) {
        worst = std::max(worst, std::abs(q.values[r] - (p1.values[r] + g1p[r] + g2p[r])));
    }
    return worst;
}

namespace {

const DenseMatrix& axis_matrix(const StructMatrices& m, int axis) {
    if (axis != 1 && axis != 2) throw Error(ErrorKind::Argument, "axis must be 1 or 2");
    return axis == 1 ? m.a1 : m.a2;
}

} // namespace

STerms s_terms(int n, int axis, const Point& x, const Point& y) {
    const StructMatrices m = struct_matrices(n);
    const DenseMatrix& a = axis_matrix(m, axis);
    const DenseMatrix at = a.transpose();
    const QVector qx = q_vector(n, x);
    const QVector qy = q_vector(n, y);
    const BasisVector px = basis_vector(n, x);
    const BasisVector py = basis_vector(n, y);
    const BasisVector pmx = basis_vector(n - 1, x);
    const BasisVector pmy = basis_vector(n - 1, y);

    STerms s;
    s.s1 = bilinear(qx.values, at, py.values) - bilinear(px.values, a, qy.values);
    s.s2 = bilinear(px.values, a * m.g1 - m.g1.transpose() * at, py.values);
    s.s3 = bilinear(px.values, a * m.g2, pmy.values) - bilinear(pmx.values, m.g2.transpose() * at, py.values);
    return s;
}

double cd_residual(int n, int axis, const Point& x, const Point& y) {
    const StructMatrices m = struct_matrices(n);
    const DenseMatrix& a = axis_matrix(m, axis);
    const QVector qx = q_vector(n, x);
    const QVector qy = q_vector(n, y);
    const BasisVector px = basis_vector(n, x);
    const BasisVector py = basis_vector(n, y);
    const double tx = cheb_t(n, x.x1);
    const double ty = cheb_t(n, y.x1);

    double rhs = bilinear(qx.values, a.transpose(), py.values) - bilinear(px.values, a, qy.values);
    double lhs = 0.0;
    const double kstar = kernel_star(n, x, y, KernelMethod::Direct);
    if (axis == 1) {
        lhs = (x.x1 - y.x1) * kstar;
        rhs += 0.5 * tx * q_poly(n, 0, y) - 0.5 * ty * q_poly(n, 0, x);
    } else {
        lhs = (x.x2 - y.x2) * kstar;
        rhs += -ty * q_poly(n, 1, x) + tx * q_poly(n, 1, y);
    }
    return std::abs(lhs - rhs);
}

} // namespace padua
