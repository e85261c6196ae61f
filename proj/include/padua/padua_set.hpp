// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "padua/point.hpp"

namespace padua {

enum class PointClass { Vertex, Edge, Interior };

[[nodiscard]] std::string_view to_string(PointClass c);

/// Geometric classification: Vertex when both coordinates have magnitude 1,
/// Edge when exactly one does, Interior otherwise (tolerance 1e-14).
[[nodiscard]] PointClass classify(const Point& p);

struct PaduaPoint {
    int k = 0; // column index 0..n, xi = cos(k pi / n)
    int j = 1; // row index starting at 1
    Point x;
    PointClass cls = PointClass::Interior;
};

/// The Padua points of degree n, ordered lexicographically in (k, j).
///
/// Column k holds xi_k = cos(k pi/n). Even columns use eta = cos((2j-1) pi/(n+1))
/// for 1 <= j <= floor(n/2)+1, odd columns use eta = cos((2j-2) pi/(n+1)) for
/// 1 <= j <= floor((n+1)/2)+1, which gives (n+1)(n+2)/2 points for every n.
class PaduaSet {
public:
    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] std::span<const PaduaPoint> points() const noexcept { return points_; }
    [[nodiscard]] const PaduaPoint& operator[](std::size_t i) const { return points_[i]; }

    /// Number of rows in column k.
    [[nodiscard]] int column_size(int k) const;

    /// Position of (k, j) in points(); ErrorKind::Index when invalid.
    [[nodiscard]] std::size_t position(int k, int j) const;

    [[nodiscard]] static std::size_t cardinality(int n) {
        return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
    }

    friend PaduaSet generate(int n);

private:
    int degree_ = 0;
    std::vector<PaduaPoint> points_;
    std::vector<std::size_t> column_offset_;
};

/// Builds Pad_n; ErrorKind::Degree ("unsupported degree") for n < 1 or n > kMaxDegree.
[[nodiscard]] PaduaSet generate(int n);

/// Distinct samples of the generating curve t -> (cos nt, cos (n+1)t) at
/// t = s pi/(n(n+1)), s = 0..n(n+1), mapped onto the orientation of Pad_n:
/// coordinates are swapped, then x2 is reflected for even n and x1 for odd n.
/// Duplicates within 1e-12 (max-norm) are dropped; first occurrence wins.
[[nodiscard]] std::vector<Point> generating_curve_points(int n);

/// Residual of the algebraic curve T_n(x1) + T_{n+1}(x2) = 0 on which Pad_n lies.
[[nodiscard]] double curve_residual(int n, const Point& x);

/// (k, j) of the unique member within tol (max-norm) of p, if any.
/// ErrorKind::Ambiguous when two members qualify.
[[nodiscard]] std::optional<std::pair<int, int>> find_index(const PaduaSet& set, const Point& p, double tol);

} // namespace padua
