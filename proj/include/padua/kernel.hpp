// SPDX-License-Identifier: MIT
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "padua/padua_set.hpp"
#include "padua/point.hpp"

namespace padua {

/// How the reproducing kernel K_n is evaluated.
///  Direct:  double sum over the orthonormal product basis, O(n^2).
///  Compact: four-term closed form with every D_n evaluated by d_term,
///           including its removable singularities. O(1) in n.
///  Auto:    the same closed form, falling back to Direct whenever one of
///           the four terms lands in the singular guard band.
enum class KernelMethod { Direct, Compact, Auto };

/// |cos(alpha) - cos(beta)| below this sends a pair to the Direct fallback.
inline constexpr double kSingularBand = 1e-7;

/// K_n(x, y) = sum_{k<=n} sum_{j<=k} P_j^k(x) P_j^k(y).
[[nodiscard]] double kernel_direct(int n, const Point& x, const Point& y);

/// D_n(alpha, beta) = (cos((n+1/2)a) cos(a/2) - cos((n+1/2)b) cos(b/2)) / (2 (cos a - cos b)),
/// evaluated in product form (1/4)(U_n(cos s) U_n(cos d) + U_{n-1}(cos s) U_{n-1}(cos d))
/// with s = (a+b)/2, d = (a-b)/2, so coincident cosines return the limit.
[[nodiscard]] double d_term(int n, double alpha, double beta);

/// Closed-form K_n with the singular guard band; see KernelMethod::Auto.
[[nodiscard]] double kernel_compact(int n, const Point& x, const Point& y);

[[nodiscard]] double kernel(int n, const Point& x, const Point& y, KernelMethod method = KernelMethod::Auto);

/// K*_n(x, y) = K_n(x, y) - T_n(x1) T_n(y1). Requires n >= 1.
[[nodiscard]] double kernel_star(int n, const Point& x, const Point& y, KernelMethod method = KernelMethod::Auto);

/// K*_n at a node divided by n(n+1): 2 for Vertex, 1 for Edge, 1/2 for Interior.
[[nodiscard]] double node_factor(PointClass c);

/// K*_n(x_{k,j}, x_{k,j}) from the class factor.
[[nodiscard]] double kernel_star_at_node(const PaduaSet& set, std::pair<int, int> index);

/// Fundamental Lagrange polynomial l_{k,j}(x) = K*_n(x, x_{k,j}) / K*_n(x_{k,j}, x_{k,j}).
[[nodiscard]] double fundamental_poly(const PaduaSet& set, std::pair<int, int> index, const Point& x,
                                      KernelMethod method = KernelMethod::Auto);

namespace detail {

/// cos/sin of theta, n theta and (n+1) theta for one coordinate.
struct AxisAngles {
    double theta = 0.0;
    double c = 1.0, s = 0.0;
    double cn = 1.0, sn = 0.0;
    double cn1 = 1.0, sn1 = 0.0;
};

/// Per-point data for the closed form, computed once per point and degree.
struct PointAngles {
    AxisAngles a1;
    AxisAngles a2;
};

[[nodiscard]] PointAngles point_angles(int n, const Point& x);

/// Terms whose |cos a - cos b| is at least this use the quotient directly;
/// closer pairs go through the product form, which has no cancellation.
inline constexpr double kQuotientThreshold = 0.05;

/// sin((m+1) u) / sin(u) for m = n and m = n-1, with the limit at multiples
/// of pi. The n-1 ratio is 0 when n = 0.
void dirichlet_pair(int n, double u, double& ratio_n, double& ratio_n_minus_1);

/// sin((m+1) u) / sin(u), with the limit at multiples of pi; 0 for m = -1.
[[nodiscard]] double dirichlet_ratio(int m, double u);

/// Closed-form K_n from the four D terms. With guard set, returns false
/// (value untouched) when a term has |cos a - cos b| < kSingularBand.
[[nodiscard]] bool compact_from_angles(int n, const PointAngles& x, const PointAngles& y, bool guard, double& value);

/// Double sum from orthonormal tables T~_0..T~_n of each coordinate.
[[nodiscard]] double direct_from_tables(int n, std::span<const double> tx1, std::span<const double> tx2,
                                        std::span<const double> ty1, std::span<const double> ty2);

} // namespace detail

/// Evaluates all fundamental polynomials of a set at once. Node-side data is
/// prepared at construction; evaluate() is const and safe to call concurrently.
/// Values are bitwise identical to fundamental_poly() with the same method.
class LagrangeBasis {
public:
    LagrangeBasis(const PaduaSet& set, KernelMethod method = KernelMethod::Auto);

    [[nodiscard]] const PaduaSet& set() const noexcept { return set_; }
    [[nodiscard]] KernelMethod method() const noexcept { return method_; }
    [[nodiscard]] std::size_t size() const noexcept { return set_.size(); }

    /// Writes l_i(x) for every node i (set order) into out, which must have size().
    void evaluate(const Point& x, std::span<double> out) const;

    /// K*_n(x, node_i) for every node.
    void evaluate_kernel_star(const Point& x, std::span<double> out) const;

    [[nodiscard]] std::span<const double> node_values() const noexcept { return denominators_; }

private:
    PaduaSet set_;
    KernelMethod method_;
    int n_;
    std::vector<double> denominators_;
    std::vector<double> node_tn_; // T_n of each node's first coordinate
    std::vector<detail::PointAngles> node_angles_;
    std::vector<double> node_tables_; // Direct only: T~ tables of both coordinates per node
};

} // namespace padua
