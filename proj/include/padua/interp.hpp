// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "padua/kernel.hpp"
#include "padua/padua_set.hpp"

namespace padua {

using ScalarFunction = std::function<double(const Point&)>;

/// Function values at the nodes, in PaduaSet order.
struct SampleVector {
    int degree = 0;
    std::vector<double> values;
};

enum class GridSpacing { Uniform, ChebyshevGauss };

[[nodiscard]] std::string_view to_string(GridSpacing s);

/// m x m tensor grid over [-1,1]^2. Uniform spacing includes the endpoints;
/// ChebyshevGauss uses -cos((2i+1) pi / (2m)), ascending.
class EvalGrid {
public:
    explicit EvalGrid(int m = 200, GridSpacing spacing = GridSpacing::Uniform);

    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] GridSpacing spacing() const noexcept { return spacing_; }
    [[nodiscard]] std::span<const double> axis() const noexcept { return axis_; }
    [[nodiscard]] std::size_t size() const noexcept { return axis_.size() * axis_.size(); }

    /// Node (i, j) = (axis[i], axis[j]); flat index i*m + j.
    [[nodiscard]] Point node(std::size_t flat) const {
        return Point{axis_[flat / axis_.size()], axis_[flat % axis_.size()]};
    }

private:
    int m_;
    GridSpacing spacing_;
    std::vector<double> axis_;
};

/// Row-major m x m values over an EvalGrid (row i holds x1 = axis[i]).
struct GridValues {
    int m = 0;
    std::vector<double> values;

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
        return values[i * static_cast<std::size_t>(m) + j];
    }
};

/// values[i] = f(node i). A throwing or non-finite f is reported as
/// ErrorKind::Evaluation naming the node.
[[nodiscard]] SampleVector sample(const PaduaSet& set, const ScalarFunction& f);

/// L_n f(x) = sum_i samples[i] l_i(x), one fundamental polynomial at a time.
/// This is the reference path; the grid routines must match it bitwise.
[[nodiscard]] double interpolate(const PaduaSet& set, const SampleVector& samples, const Point& x,
                                 KernelMethod method = KernelMethod::Auto);

/// Same value through a prepared basis.
[[nodiscard]] double interpolate(const LagrangeBasis& basis, std::span<const double> samples, const Point& x);

[[nodiscard]] GridValues interpolate_grid_serial(const PaduaSet& set, const SampleVector& samples,
                                                 const EvalGrid& grid, KernelMethod method = KernelMethod::Auto);

/// OpenMP over grid rows; output identical to interpolate_grid_serial.
[[nodiscard]] GridValues interpolate_grid(const PaduaSet& set, const SampleVector& samples, const EvalGrid& grid,
                                          KernelMethod method = KernelMethod::Auto);

/// Interpolant values at arbitrary points (OpenMP over points).
[[nodiscard]] std::vector<double> interpolate_points(const LagrangeBasis& basis, std::span<const double> samples,
                                                     std::span<const Point> points);

/// Lambda(x) = sum_i |l_i(x)|.
[[nodiscard]] double lebesgue_function(const PaduaSet& set, const Point& x, KernelMethod method = KernelMethod::Auto);
[[nodiscard]] double lebesgue_function(const LagrangeBasis& basis, const Point& x);

/// Grid maximum of the Lebesgue function, reported with where it occurred.
/// Ties resolve to the smallest flat grid index.
struct LebesgueEstimate {
    double value = 0.0;
    Point argmax;
    int grid_m = 0;
    GridSpacing spacing = GridSpacing::Uniform;
};

[[nodiscard]] LebesgueEstimate lebesgue_constant_serial(const PaduaSet& set, const EvalGrid& grid,
                                                        KernelMethod method = KernelMethod::Auto);
[[nodiscard]] LebesgueEstimate lebesgue_constant(const PaduaSet& set, const EvalGrid& grid,
                                                 KernelMethod method = KernelMethod::Auto);

} // namespace padua
