#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace tem {

/// Sine integral Si(x) = \int_0^x sin(u)/u du.
double sine_integral(double x);

/// Normalized sinc: sin(pi u)/(pi u), sinc(0) = 1.
double sinc(double u);

struct RootOptions {
    double f_tol = 0.0;       // stop when |f| <= f_tol (0 disables)
    double x_tol = 1e-14;     // absolute bracket tolerance
    int max_iters = 200;
};

/// Brent's method on a bracketing interval [lo, hi] with f(lo)*f(hi) <= 0.
/// Throws std::invalid_argument if the bracket is invalid.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  const RootOptions& opts = {});

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Simpson quadrature. Estimated absolute error <= tol * (1 + |result|).
/// max_depth bounds the recursion; exceeding it throws QuadratureError.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 40);

/// Uniformly spaced evaluation grid over [t0, t0 + step*(size-1)].
struct UniformGrid {
    double t0 = 0.0;
    double step = 0.0;
    std::size_t size = 0;

    double at(std::size_t i) const { return t0 + step * static_cast<double>(i); }
    double back() const { return at(size - 1); }
    /// Index of the cell containing t, clamped to [0, size-2].
    std::size_t cell_of(double t) const;
};

UniformGrid make_grid(double t_begin, double t_end, double step);

/// Cumulative integral F[j] = \int_{grid[0]}^{grid[j]} f, where each cell is
/// integrated with the degree-5 collocation polynomial on a 6-point stencil.
std::vector<double> cumulative_integral(std::span<const double> f, const UniformGrid& grid);

/// Evaluate the cumulative integral at an arbitrary point inside the grid,
/// integrating the same local polynomial over the partial cell.
double cumulative_at(std::span<const double> f, std::span<const double> cumulative,
                     const UniformGrid& grid, double t);

/// \int_a^b f for a grid-sampled function (6th-order composite rule).
double grid_integral(std::span<const double> f, std::span<const double> cumulative,
                     const UniformGrid& grid, double a, double b);

/// Local polynomial interpolation of a grid function (8-point Lagrange stencil).
double grid_interpolate(std::span<const double> f, const UniformGrid& grid, double t);

/// h-weighted inner product restricted to [w_lo, w_hi] (exact for bandlimited products).
double windowed_dot(std::span<const double> u, std::span<const double> v,
                    const UniformGrid& grid, double w_lo, double w_hi);

double windowed_norm(std::span<const double> u, const UniformGrid& grid,
                     double w_lo, double w_hi);

/// Deterministic uniform double in [-1, 1) from the top 53 bits of a 64-bit draw.
/// Used wherever coefficient streams must be bit-identical across platforms.
double unit_symmetric_from_bits(std::uint64_t bits);

}  // namespace tem
