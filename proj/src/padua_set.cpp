// SPDX-License-Identifier: MIT
#include "padua/padua_set.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "padua/chebyshev.hpp"
#include "padua/error.hpp"

namespace padua {

namespace {

constexpr double kBoundaryTol = 1e-14;
constexpr double kCurveDedupTol = 1e-12;

void check_set_degree(int n) {
    if (n < 1 || n > kMaxDegree) {
        throw Error(ErrorKind::Degree, "unsupported degree " + std::to_string(n) + " (expected 1.." +
                                           std::to_string(kMaxDegree) + ")");
    }
}

} // namespace

std::string_view to_string(PointClass c) {
    switch (c) {
    case PointClass::Vertex: return "vertex";
    case PointClass::Edge: return "edge";
    case PointClass::Interior: return "interior";
    }
    return "?";
}

PointClass classify(const Point& p) {
    const bool on1 = std::abs(std::abs(p.x1) - 1.0) <= kBoundaryTol;
    const bool on2 = std::abs(std::abs(p.x2) - 1.0) <= kBoundaryTol;
    if (on1 && on2) return PointClass::Vertex;
    if (on1 || on2) return PointClass::Edge;
    return PointClass::Interior;
}

int PaduaSet::column_size(int k) const {
    if (k < 0 || k > degree_) throw Error(ErrorKind::Index, "column index out of range: " + std::to_string(k));
    return (k % 2 == 0) ? degree_ / 2 + 1 : (degree_ + 1) / 2 + 1;
}

std::size_t PaduaSet::position(int k, int j) const {
    if (j < 1 || j > column_size(k)) {
        throw Error(ErrorKind::Index, "no Padua point (" + std::to_string(k) + ", " + std::to_string(j) + ")");
    }
    return column_offset_[k] + static_cast<std::size_t>(j - 1);
}

PaduaSet generate(int n) {
    check_set_degree(n);
    PaduaSet set;
    set.degree_ = n;
    set.points_.reserve(PaduaSet::cardinality(n));
    set.column_offset_.reserve(n + 1);
    const double pi = std::numbers::pi;
    for (int k = 0; k <= n; ++k) {
        set.column_offset_.push_back(set.points_.size());
        // cos(pi/2) does not round to 0.
        const double xi = (2 * k == n) ? 0.0 : std::cos(k * pi / n);
        const int rows = set.column_size(k);
        for (int j = 1; j <= rows; ++j) {
            const int m = (k % 2 == 0) ? 2 * j - 1 : 2 * j - 2;
            const double eta = (2 * m == n + 1) ? 0.0 : std::cos(m * pi / (n + 1));
            PaduaPoint p{k, j, Point{xi, eta}, PointClass::Interior};
            p.cls = classify(p.x);
            set.points_.push_back(p);
        }
    }
    return set;
}

std::vector<Point> generating_curve_points(int n) {
    check_set_degree(n);
    const double pi = std::numbers::pi;
    const long long samples = static_cast<long long>(n) * (n + 1);
    std::vector<Point> out;
    out.reserve(PaduaSet::cardinality(n));
    std::multimap<double, std::size_t> seen;
    for (long long s = 0; s <= samples; ++s) {
        const double t = static_cast<double>(s) * pi / static_cast<double>(samples);
        const double a = std::cos(n * t);
        const double b = std::cos((n + 1) * t);
        const Point p = (n % 2 == 0) ? Point{b, -a} : Point{-b, a};
        const auto lo = seen.lower_bound(p.x1 - kCurveDedupTol);
        const auto hi = seen.upper_bound(p.x1 + kCurveDedupTol);
        bool duplicate = false;
        for (auto it = lo; it != hi && !duplicate; ++it) {
            duplicate = max_norm_distance(p, out[it->second]) <= kCurveDedupTol;
        }
        if (!duplicate) {
            seen.emplace(p.x1, out.size());
            out.push_back(p);
        }
    }
    return out;
}

double curve_residual(int n, const Point& x) {
    return cheb_t(n, x.x1) + cheb_t(n + 1, x.x2);
}

std::optional<std::pair<int, int>> find_index(const PaduaSet& set, const Point& p, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::Argument, "find_index tolerance must be positive");
    std::optional<std::pair<int, int>> hit;
    for (const PaduaPoint& q : set.points()) {
        if (max_norm_distance(q.x, p) <= tol) {
            if (hit) throw Error(ErrorKind::Ambiguous, "ambiguous match: several Padua points within tolerance");
            hit = std::pair{q.k, q.j};
        }
    }
    return hit;
}

} // namespace padua
