// SPDX-License-Identifier: MIT
#include "padua/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "padua/error.hpp"

namespace padua {

void check_degree(int n) {
    if (n < 0 || n > kMaxDegree) {
        throw Error(ErrorKind::Degree, n < 0 ? "unsupported degree " + std::to_string(n)
                                             : "degree too large: " + std::to_string(n));
    }
}

void check_in_square(const Point& p) {
    if (!in_square(p)) {
        throw Error(ErrorKind::Domain, "point (" + std::to_string(p.x1) + ", " +
                                           std::to_string(p.x2) + ") outside [-1,1]^2");
    }
}

namespace {

void check_arg(int k, double x) {
    if (k < 0) throw Error(ErrorKind::Index, "negative Chebyshev index " + std::to_string(k));
    if (!(std::abs(x) <= 1.0)) {
        throw Error(ErrorKind::Domain, "Chebyshev argument " + std::to_string(x) + " outside [-1,1]");
    }
}

} // namespace

double cheb_t(int k, double x) {
    check_arg(k, x);
    if (k == 0) return 1.0;
    return std::cos(k * std::acos(x));
}

double cheb_u(int k, double x) {
    check_arg(k, x);
    if (x == 1.0) return k + 1.0;
    if (x == -1.0) return (k % 2 == 0) ? k + 1.0 : -(k + 1.0);
    const double theta = std::acos(x);
    return std::sin((k + 1) * theta) / std::sin(theta);
}

double cheb_t_norm(int k, double x) {
    const double t = cheb_t(k, x);
    return k == 0 ? t : std::numbers::sqrt2 * t;
}

void cheb_t_norm_table(double x, std::span<double> out) {
    if (out.empty()) return;
    check_arg(0, x);
    const double theta = std::acos(x);
    out[0] = 1.0;
    for (std::size_t k = 1; k < out.size(); ++k) {
        out[k] = std::numbers::sqrt2 * std::cos(static_cast<double>(k) * theta);
    }
}

BasisVector basis_vector(int n, const Point& x) {
    check_degree(n);
    check_in_square(x);
    std::vector<double> t1(n + 1), t2(n + 1);
    cheb_t_norm_table(x.x1, t1);
    cheb_t_norm_table(x.x2, t2);
    BasisVector b{n, std::vector<double>(n + 1)};
    for (int j = 0; j <= n; ++j) b.values[j] = t1[n - j] * t2[j];
    return b;
}

OrthoExpansion::OrthoExpansion(int degree)
    : OrthoExpansion(degree, std::vector<double>(size_for(degree < 0 ? 0 : degree), 0.0)) {}

OrthoExpansion::OrthoExpansion(int degree, std::vector<double> coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
    check_degree(degree);
    if (coeffs_.size() != size_for(degree)) {
        throw Error(ErrorKind::Length, "expansion of degree " + std::to_string(degree) + " needs " +
                                           std::to_string(size_for(degree)) + " coefficients, got " +
                                           std::to_string(coeffs_.size()));
    }
}

double& OrthoExpansion::coeff(int k, int j) {
    if (k < 0 || k > degree_ || j < 0 || j > k) throw Error(ErrorKind::Index, "coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k) * (k + 1) / 2 + j];
}

double OrthoExpansion::coeff(int k, int j) const {
    if (k < 0 || k > degree_ || j < 0 || j > k) throw Error(ErrorKind::Index, "coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k) * (k + 1) / 2 + j];
}

double OrthoExpansion::max_abs_coefficient() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double OrthoExpansion::operator()(const Point& x) const {
    check_in_square(x);
    std::vector<double> t1(degree_ + 1), t2(degree_ + 1);
    cheb_t_norm_table(x.x1, t1);
    cheb_t_norm_table(x.x2, t2);
    double sum = 0.0;
    std::size_t idx = 0;
    for (int k = 0; k <= degree_; ++k) {
        for (int j = 0; j <= k; ++j) sum += coeffs_[idx++] * t1[k - j] * t2[j];
    }
    return sum;
}

} // namespace padua

namespace padua {

std::vector<double> evaluate_tensor(const OrthoExpansion& e, std::span<const double> xs1,
                                    std::span<const double> xs2) {
    const int n = e.degree();
    const std::size_t w = n + 1;
    const std::size_t m1 = xs1.size(), m2 = xs2.size();
    std::vector<double> t1(m1 * w), t2(m2 * w);
    for (std::size_t a = 0; a < m1; ++a) cheb_t_norm_table(xs1[a], std::span(t1).subspan(a * w, w));
    for (std::size_t b = 0; b < m2; ++b) cheb_t_norm_table(xs2[b], std::span(t2).subspan(b * w, w));

    // h[a][j] = sum_{i <= n-j} c(i+j, j) T~_i(xs1[a])
    std::vector<double> h(m1 * w, 0.0);
    for (std::size_t a = 0; a < m1; ++a) {
        for (int j = 0; j <= n; ++j) {
            double s = 0.0;
            for (int i = 0; i + j <= n; ++i) s += e.coeff(i + j, j) * t1[a * w + i];
            h[a * w + j] = s;
        }
    }
    std::vector<double> out(m1 * m2);
    for (std::size_t a = 0; a < m1; ++a) {
        for (std::size_t b = 0; b < m2; ++b) {
            double s = 0.0;
            for (std::size_t j = 0; j < w; ++j) s += h[a * w + j] * t2[b * w + j];
            out[a * m2 + b] = s;
        }
    }
    return out;
}

} // namespace padua
