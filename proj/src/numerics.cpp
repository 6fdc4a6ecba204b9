#include "tem/numerics.hpp"

#include <gsl/gsl_sf_expint.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace tem {

double sine_integral(double x) { return gsl_sf_Si(x); }

double sinc(double u) {
    if (u == 0.0) return 1.0;
    const double pu = M_PI * u;
    return std::sin(pu) / pu;
}

double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  const RootOptions& opts) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::invalid_argument("brent_root: endpoints do not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < opts.max_iters; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * opts.x_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (opts.f_tol > 0.0 && std::abs(fb) <= opts.f_tol) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    return b;
}

namespace {

double simpson_panel(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_panel(f, a, m, fa, flm, fm);
    const double right = simpson_panel(f, m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= max_depth)
        throw QuadratureError("adaptive_simpson: max depth reached before convergence");
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    if (a > b) throw std::invalid_argument("adaptive_simpson: a > b");
    if (tol <= 0.0) throw std::invalid_argument("adaptive_simpson: tol must be positive");
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson_panel(f, a, b, fa, fm, fb);
    // first pass with a unit scale; the (1 + |result|) scale is applied via one refinement
    const double scale = 1.0 + std::abs(whole);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol * scale, 0, max_depth);
}

std::size_t UniformGrid::cell_of(double t) const {
    if (size < 2) return 0;
    const auto j = static_cast<std::ptrdiff_t>(std::floor((t - t0) / step));
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(j, 0, static_cast<std::ptrdiff_t>(size) - 2));
}

UniformGrid make_grid(double t_begin, double t_end, double step) {
    if (step <= 0.0 || t_end <= t_begin) throw std::invalid_argument("make_grid: bad arguments");
    const auto n = static_cast<std::size_t>(std::ceil((t_end - t_begin) / step)) + 1;
    return UniformGrid{t_begin, step, std::max<std::size_t>(n, 2)};
}

namespace {

constexpr int kStencil = 6;

// Antiderivative coefficients of the degree-5 Lagrange basis on nodes {0..5}:
// basis_integ[k][i] is the coefficient of s^(i+1)/(i+1) ... stored directly as
// the antiderivative polynomial coefficients (degree 6, constant term zero).
struct BasisTable {
    // antiderivative of L_k as coefficients of s^1..s^6
    double coef[kStencil][kStencil + 1];
    BasisTable() {
        for (int k = 0; k < kStencil; ++k) {
            // multiply out prod_{q != k} (s - q) / (k - q)
            double poly[kStencil] = {1.0, 0, 0, 0, 0, 0};  // coefficients of s^0..s^5
            int degree = 0;
            double denom = 1.0;
            for (int q = 0; q < kStencil; ++q) {
                if (q == k) continue;
                denom *= static_cast<double>(k - q);
                for (int i = degree; i >= 0; --i) {
                    poly[i + 1] += poly[i];
                    poly[i] *= -static_cast<double>(q);
                }
                ++degree;
            }
            for (int i = 0; i <= kStencil; ++i) coef[k][i] = 0.0;
            for (int i = 0; i <= degree; ++i) coef[k][i + 1] = poly[i] / (denom * (i + 1));
        }
    }
    // antiderivative value at stencil coordinate s
    double integ(int k, double s) const {
        double acc = 0.0;
        for (int i = kStencil; i >= 1; --i) acc = (acc + coef[k][i]) * s;
        return acc;
    }
};

const BasisTable& basis_table() {
    static const BasisTable table;
    return table;
}

std::size_t stencil_lo(std::size_t cell, std::size_t n) {
    const auto lo = static_cast<std::ptrdiff_t>(cell) - 2;
    return static_cast<std::size_t>(
        std::clamp<std::ptrdiff_t>(lo, 0, static_cast<std::ptrdiff_t>(n) - kStencil));
}

}  // namespace

std::vector<double> cumulative_integral(std::span<const double> f, const UniformGrid& grid) {
    if (f.size() != grid.size) throw std::invalid_argument("cumulative_integral: size mismatch");
    if (grid.size < static_cast<std::size_t>(kStencil))
        throw std::invalid_argument("cumulative_integral: grid too small");
    const auto& table = basis_table();
    std::vector<double> out(grid.size, 0.0);
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < grid.size; ++j) {
        const std::size_t lo = stencil_lo(j, grid.size);
        const double off = static_cast<double>(j - lo);
        double cell = 0.0;
        for (int k = 0; k < kStencil; ++k)
            cell += f[lo + k] * (table.integ(k, off + 1.0) - table.integ(k, off));
        acc += cell * grid.step;
        out[j + 1] = acc;
    }
    return out;
}

double cumulative_at(std::span<const double> f, std::span<const double> cumulative,
                     const UniformGrid& grid, double t) {
    const auto& table = basis_table();
    const std::size_t j = grid.cell_of(t);
    const double frac = std::clamp((t - grid.at(j)) / grid.step, 0.0, 1.0);
    const std::size_t lo = stencil_lo(j, grid.size);
    const double off = static_cast<double>(j - lo);
    double part = 0.0;
    for (int k = 0; k < kStencil; ++k)
        part += f[lo + k] * (table.integ(k, off + frac) - table.integ(k, off));
    return cumulative[j] + part * grid.step;
}

double grid_integral(std::span<const double> f, std::span<const double> cumulative,
                     const UniformGrid& grid, double a, double b) {
    return cumulative_at(f, cumulative, grid, b) - cumulative_at(f, cumulative, grid, a);
}

double grid_interpolate(std::span<const double> f, const UniformGrid& grid, double t) {
    constexpr int kOrder = 8;
    if (grid.size < kOrder) throw std::invalid_argument("grid_interpolate: grid too small");
    const std::size_t j = grid.cell_of(t);
    const auto lo = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(j) - 3, 0, static_cast<std::ptrdiff_t>(grid.size) - kOrder));
    const double s = (t - grid.at(lo)) / grid.step;
    double acc = 0.0;
    for (int k = 0; k < kOrder; ++k) {
        double lk = 1.0;
        for (int q = 0; q < kOrder; ++q) {
            if (q == k) continue;
            lk *= (s - static_cast<double>(q)) / static_cast<double>(k - q);
        }
        acc += f[lo + static_cast<std::size_t>(k)] * lk;
    }
    return acc;
}

double windowed_dot(std::span<const double> u, std::span<const double> v,
                    const UniformGrid& grid, double w_lo, double w_hi) {
    if (u.size() != grid.size || v.size() != grid.size)
        throw std::invalid_argument("windowed_dot: size mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.size; ++i) {
        const double t = grid.at(i);
        if (t < w_lo || t > w_hi) continue;
        acc += u[i] * v[i];
    }
    return acc * grid.step;
}

double windowed_norm(std::span<const double> u, const UniformGrid& grid,
                     double w_lo, double w_hi) {
    return std::sqrt(windowed_dot(u, u, grid, w_lo, w_hi));
}

double unit_symmetric_from_bits(std::uint64_t bits) {
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

}  // namespace tem
