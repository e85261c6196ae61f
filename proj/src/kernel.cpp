// SPDX-License-Identifier: MIT
#include "padua/kernel.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "padua/chebyshev.hpp"
#include "padua/error.hpp"

namespace padua {

namespace detail {

void dirichlet_pair(int n, double u, double& ratio_n, double& ratio_n_minus_1) {
    const double k = std::nearbyint(u / std::numbers::pi);
    const double v = u - k * std::numbers::pi;
    const bool odd_shift = static_cast<long long>(std::abs(k)) % 2 == 1;
    // Shifting u by k pi multiplies sin((m+1)u)/sin(u) by (-1)^(k m).
    const double sign_n = (odd_shift && n % 2 == 1) ? -1.0 : 1.0;
    const double sign_n1 = (odd_shift && n % 2 == 0) ? -1.0 : 1.0;
    if (v == 0.0) {
        ratio_n = sign_n * (n + 1.0);
        ratio_n_minus_1 = sign_n1 * n;
        return;
    }
    const double sv = std::sin(v), cv = std::cos(v);
    const double snv = std::sin(n * v), cnv = std::cos(n * v);
    ratio_n = sign_n * (snv * cv + cnv * sv) / sv;
    ratio_n_minus_1 = sign_n1 * snv / sv;
}

double dirichlet_ratio(int m, double u) {
    if (m < 0) return 0.0;
    double r = 0.0, unused = 0.0;
    dirichlet_pair(m, u, r, unused);
    return r;
}

PointAngles point_angles(int n, const Point& x) {
    const auto fill = [n](double c) {
        AxisAngles ax;
        ax.theta = std::acos(c);
        ax.c = c;
        ax.s = std::sin(ax.theta);
        ax.cn = std::cos(n * ax.theta);
        ax.sn = std::sin(n * ax.theta);
        ax.cn1 = std::cos((n + 1) * ax.theta);
        ax.sn1 = std::sin((n + 1) * ax.theta);
        return ax;
    };
    return PointAngles{fill(x.x1), fill(x.x2)};
}

namespace {

// D_n(a, b) = (1/4)(U_n(cos s) U_n(cos d) + U_{n-1}(cos s) U_{n-1}(cos d)), s = (a+b)/2, d = (a-b)/2.
double product_form(int n, double a, double b) {
    double rs_n = 0.0, rs_n1 = 0.0, rd_n = 0.0, rd_n1 = 0.0;
    dirichlet_pair(n, 0.5 * (a + b), rs_n, rs_n1);
    dirichlet_pair(n, 0.5 * (a - b), rd_n, rd_n1);
    return 0.25 * (rs_n * rd_n + rs_n1 * rd_n1);
}

} // namespace

bool compact_from_angles(int n, const PointAngles& x, const PointAngles& y, bool guard, double& value) {
    // cos(m(t + p)) and cos(m(t - p)) from the per-point tables.
    struct Sums {
        double cosine[2];
        double big_c[2]; // cos((n+1)u) + cos(nu)
        double angle[2];
    };
    const auto sums = [](const AxisAngles& u, const AxisAngles& v) {
        const double p = u.c * v.c, q = u.s * v.s;
        const double pn = u.cn * v.cn, qn = u.sn * v.sn;
        const double pn1 = u.cn1 * v.cn1, qn1 = u.sn1 * v.sn1;
        return Sums{{p - q, p + q}, {(pn1 - qn1) + (pn - qn), (pn1 + qn1) + (pn + qn)},
                    {u.theta + v.theta, u.theta - v.theta}};
    };
    const Sums a = sums(x.a1, y.a1);
    const Sums b = sums(x.a2, y.a2);

    double total = 0.0;
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            const double den = a.cosine[s] - b.cosine[t];
            if (std::abs(den) >= kQuotientThreshold) {
                total += 0.25 * (a.big_c[s] - b.big_c[t]) / den;
            } else {
                if (guard && std::abs(den) < kSingularBand) return false;
                total += product_form(n, a.angle[s], b.angle[t]);
            }
        }
    }
    value = total;
    return true;
}

double direct_from_tables(int n, std::span<const double> tx1, std::span<const double> tx2,
                          std::span<const double> ty1, std::span<const double> ty2) {
    // Neumaier summation: the diagonal K_n(x, x) grows like n^2 and plain
    // accumulation loses about log2(n^2) bits.
    double sum = 0.0, carry = 0.0;
    for (int k = 0; k <= n; ++k) {
        for (int j = 0; j <= k; ++j) {
            const double term = (tx1[k - j] * ty1[k - j]) * (tx2[j] * ty2[j]);
            const double t = sum + term;
            carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
            sum = t;
        }
    }
    return sum + carry;
}

} // namespace detail

namespace {

void check_kernel_args(int n, const Point& x, const Point& y) {
    check_degree(n);
    check_in_square(x);
    check_in_square(y);
}

double kernel_unchecked(int n, const Point& x, const Point& y, KernelMethod method) {
    switch (method) {
    case KernelMethod::Direct: return kernel_direct(n, x, y);
    case KernelMethod::Compact: {
        double value = 0.0;
        (void)detail::compact_from_angles(n, detail::point_angles(n, x), detail::point_angles(n, y), false, value);
        return value;
    }
    case KernelMethod::Auto: return kernel_compact(n, x, y);
    }
    return kernel_direct(n, x, y);
}

void check_star_degree(int n) {
    if (n < 1) throw Error(ErrorKind::Degree, "unsupported degree " + std::to_string(n) + " for K*");
}

} // namespace

double kernel_direct(int n, const Point& x, const Point& y) {
    check_kernel_args(n, x, y);
    std::vector<double> tab(4 * static_cast<std::size_t>(n + 1));
    const std::span<double> all(tab);
    const std::size_t w = n + 1;
    cheb_t_norm_table(x.x1, all.subspan(0, w));
    cheb_t_norm_table(x.x2, all.subspan(w, w));
    cheb_t_norm_table(y.x1, all.subspan(2 * w, w));
    cheb_t_norm_table(y.x2, all.subspan(3 * w, w));
    return detail::direct_from_tables(n, all.subspan(0, w), all.subspan(w, w), all.subspan(2 * w, w),
                                      all.subspan(3 * w, w));
}

double d_term(int n, double alpha, double beta) {
    if (n < 0) throw Error(ErrorKind::Degree, "unsupported degree " + std::to_string(n));
    double rs_n = 0.0, rs_n1 = 0.0, rd_n = 0.0, rd_n1 = 0.0;
    detail::dirichlet_pair(n, 0.5 * (alpha + beta), rs_n, rs_n1);
    detail::dirichlet_pair(n, 0.5 * (alpha - beta), rd_n, rd_n1);
    return 0.25 * (rs_n * rd_n + rs_n1 * rd_n1);
}

double kernel_compact(int n, const Point& x, const Point& y) {
    check_kernel_args(n, x, y);
    double value = 0.0;
    if (detail::compact_from_angles(n, detail::point_angles(n, x), detail::point_angles(n, y), true, value)) return value;
    return kernel_direct(n, x, y);
}

double kernel(int n, const Point& x, const Point& y, KernelMethod method) {
    check_kernel_args(n, x, y);
    return kernel_unchecked(n, x, y, method);
}

double kernel_star(int n, const Point& x, const Point& y, KernelMethod method) {
    check_star_degree(n);
    return kernel(n, x, y, method) - cheb_t(n, x.x1) * cheb_t(n, y.x1);
}

double node_factor(PointClass c) {
    switch (c) {
    case PointClass::Vertex: return 2.0;
    case PointClass::Edge: return 1.0;
    case PointClass::Interior: return 0.5;
    }
    return 0.0;
}

double kernel_star_at_node(const PaduaSet& set, std::pair<int, int> index) {
    const PaduaPoint& p = set[set.position(index.first, index.second)];
    const double n = set.degree();
    return n * (n + 1.0) * node_factor(p.cls);
}

double fundamental_poly(const PaduaSet& set, std::pair<int, int> index, const Point& x, KernelMethod method) {
    const PaduaPoint& node = set[set.position(index.first, index.second)];
    return kernel_star(set.degree(), x, node.x, method) / kernel_star_at_node(set, index);
}

LagrangeBasis::LagrangeBasis(const PaduaSet& set, KernelMethod method)
    : set_(set), method_(method), n_(set.degree()) {
    const std::size_t count = set_.size();
    denominators_.resize(count);
    node_tn_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        denominators_[i] = kernel_star_at_node(set_, {set_[i].k, set_[i].j});
        node_tn_[i] = cheb_t(n_, set_[i].x.x1);
    }
    if (method_ == KernelMethod::Direct) {
        const std::size_t w = n_ + 1;
        node_tables_.resize(2 * w * count);
        for (std::size_t i = 0; i < count; ++i) {
            const std::span<double> row(node_tables_.data() + 2 * w * i, 2 * w);
            cheb_t_norm_table(set_[i].x.x1, row.subspan(0, w));
            cheb_t_norm_table(set_[i].x.x2, row.subspan(w, w));
        }
    } else {
        node_angles_.reserve(count);
        for (std::size_t i = 0; i < count; ++i) node_angles_.push_back(detail::point_angles(n_, set_[i].x));
    }
}

void LagrangeBasis::evaluate_kernel_star(const Point& x, std::span<double> out) const {
    check_in_square(x);
    const std::size_t count = set_.size();
    if (out.size() != count) throw Error(ErrorKind::Length, "output span does not match the point set");
    const double tn_x = cheb_t(n_, x.x1);

    switch (method_) {
    case KernelMethod::Direct: {
        const std::size_t w = n_ + 1;
        std::vector<double> tx(2 * w);
        const std::span<double> txs(tx);
        cheb_t_norm_table(x.x1, txs.subspan(0, w));
        cheb_t_norm_table(x.x2, txs.subspan(w, w));
        for (std::size_t i = 0; i < count; ++i) {
            const std::span<const double> row(node_tables_.data() + 2 * w * i, 2 * w);
            const double k = detail::direct_from_tables(n_, txs.subspan(0, w), txs.subspan(w, w), row.subspan(0, w),
                                                        row.subspan(w, w));
            out[i] = k - tn_x * node_tn_[i];
        }
        break;
    }
    case KernelMethod::Compact: {
        const detail::PointAngles ax = detail::point_angles(n_, x);
        for (std::size_t i = 0; i < count; ++i) {
            double k = 0.0;
            (void)detail::compact_from_angles(n_, ax, node_angles_[i], false, k);
            out[i] = k - tn_x * node_tn_[i];
        }
        break;
    }
    case KernelMethod::Auto: {
        const detail::PointAngles ax = detail::point_angles(n_, x);
        for (std::size_t i = 0; i < count; ++i) {
            double k = 0.0;
            if (!detail::compact_from_angles(n_, ax, node_angles_[i], true, k)) k = kernel_direct(n_, x, set_[i].x);
            out[i] = k - tn_x * node_tn_[i];
        }
        break;
    }
    }
}

void LagrangeBasis::evaluate(const Point& x, std::span<double> out) const {
    evaluate_kernel_star(x, out);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] /= denominators_[i];
}

} // namespace padua
