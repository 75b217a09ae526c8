#pragma once

#include "ncgqw/constants.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ncgqw {

/// Uniform grid on [0, x_max] with hard walls at both ends.
struct Grid1D {
    double x_max;    // m
    int n_points;    // grid points including both walls

    double spacing() const { return x_max / (n_points - 1); }
};

namespace fd_detail {

/// Closed-form estimate of |r_n| (kept independent of the Airy module so this
/// solver remains a standalone oracle).
inline double airy_zero_estimate(int n) {
    return std::pow(3.0 * std::numbers::pi * (4.0 * n - 1.0) / 8.0, 2.0 / 3.0);
}

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// lambda, by the Sturm sign-count of the LDL^T pivots.
inline int sturm_count_below(const std::vector<double>& diag, double off_sq, double lambda) {
    int count = 0;
    constexpr double pivmin = 1e-300;
    double d = diag.front() - lambda;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        d = diag[i] - lambda - off_sq / d;
        if (std::abs(d) < pivmin) d = -pivmin;
        if (d < 0.0) ++count;
    }
    return count;
}

inline void build_operator(const Grid1D& grid, const Constants& c, std::vector<double>& diag,
                           double& off) {
    const double h = grid.spacing();
    const double kinetic = c.hbar * c.hbar / (2.0 * c.mass * h * h);
    const int interior = grid.n_points - 2;
    diag.resize(interior);
    for (int i = 0; i < interior; ++i) {
        const double x = (i + 1) * h;
        diag[i] = 2.0 * kinetic + c.mass * c.g_accel * x;
    }
    off = -kinetic;
}

inline void validate_grid(int n_levels, const Grid1D& grid, const Constants& c) {
    if (n_levels < 1) throw std::invalid_argument("fd_eigenvalues: need at least one level");
    if (grid.n_points < 200)
        throw std::invalid_argument("fd_eigenvalues: grid must have at least 200 points");
    if (!(grid.x_max > 0.0))
        throw std::invalid_argument("fd_eigenvalues: x_max must be positive");

    // A level is resolvable either when the box is deep in the gravity-bound
    // regime (turning point plus tunneling tail inside the wall; 5.5 length
    // units keep the clipped Ai^2 mass below 1e-10) or when gravity is
    // negligible against the box spectrum.
    const double l_g = std::cbrt(c.hbar * c.hbar / (2.0 * c.mass * c.mass * c.g_accel));
    const double turning = airy_zero_estimate(n_levels) * l_g;
    constexpr double tail_units = 5.5;
    const bool gravity_bound_ok = turning + tail_units * l_g <= grid.x_max;
    const double e_box_1 = c.hbar * c.hbar * std::numbers::pi * std::numbers::pi /
                           (2.0 * c.mass * grid.x_max * grid.x_max);
    const bool box_ok = c.mass * c.g_accel * grid.x_max <= 0.01 * e_box_1;
    if (!gravity_bound_ok && !box_ok)
        throw std::invalid_argument(
            "fd_eigenvalues: grid too small for requested levels (level " +
            std::to_string(n_levels) + " needs x_max >= " +
            std::to_string((turning + tail_units * l_g) * 1e6) + " um)");
}

}  // namespace fd_detail

/// Lowest n_levels eigenvalues of the hard-wall linear-potential Hamiltonian
/// -hbar^2/2m d^2/dx^2 + m g x on the grid, ascending. Symmetric second-order
/// discretization; each eigenvalue found by bisection on the Sturm count, so
/// no dense solver is involved and results are deterministic.
inline std::vector<double> fd_eigenvalues(int n_levels, const Grid1D& grid,
                                          const Constants& c) {
    fd_detail::validate_grid(n_levels, grid, c);
    std::vector<double> diag;
    double off = 0.0;
    fd_detail::build_operator(grid, c, diag, off);
    const double off_sq = off * off;

    double lo0 = std::numeric_limits<double>::infinity();
    double hi0 = -std::numeric_limits<double>::infinity();
    for (double d : diag) {
        lo0 = std::min(lo0, d - 2.0 * std::abs(off));
        hi0 = std::max(hi0, d + 2.0 * std::abs(off));
    }

    std::vector<double> out;
    out.reserve(n_levels);
    for (int level = 1; level <= n_levels; ++level) {
        double lo = lo0, hi = hi0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            if (fd_detail::sturm_count_below(diag, off_sq, mid) >= level) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

/// Eigenvector for an already-computed eigenvalue, via inverse iteration with
/// a partially pivoted tridiagonal solve. Interior points only.
inline std::vector<double> fd_eigenvector(const Grid1D& grid, const Constants& c,
                                          double energy) {
    std::vector<double> diag;
    double off = 0.0;
    fd_detail::build_operator(grid, c, diag, off);
    const int n = static_cast<int>(diag.size());

    // Shift slightly off the eigenvalue so the factorization stays regular.
    const double shift = energy * (1.0 + 1e-12) + std::abs(off) * 1e-18;

    std::vector<double> v(n, 1.0);
    for (int pass = 0; pass < 3; ++pass) {
        // LU with partial pivoting on the tridiagonal (one fill-in band).
        std::vector<double> a(n), b(n, off), f(n, 0.0), rhs = v;
        for (int i = 0; i < n; ++i) a[i] = diag[i] - shift;
        for (int i = 0; i + 1 < n; ++i) {
            double sub = off;
            if (std::abs(sub) > std::abs(a[i])) {
                std::swap(a[i], sub);
                std::swap(b[i], a[i + 1]);
                std::swap(f[i], b[i + 1]);  // f[i] was 0; picks up the fill-in
                std::swap(rhs[i], rhs[i + 1]);
            }
            if (a[i] == 0.0) a[i] = 1e-300;
            const double m = sub / a[i];
            a[i + 1] -= m * b[i];
            if (i + 2 < n) b[i + 1] -= m * f[i];
            rhs[i + 1] -= m * rhs[i];
        }
        if (a[n - 1] == 0.0) a[n - 1] = 1e-300;
        // Back substitution.
        v[n - 1] = rhs[n - 1] / a[n - 1];
        if (n >= 2) v[n - 2] = (rhs[n - 2] - b[n - 2] * v[n - 1]) / a[n - 2];
        for (int i = n - 3; i >= 0; --i)
            v[i] = (rhs[i] - b[i] * v[i + 1] - f[i] * v[i + 2]) / a[i];
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
    }
    return v;
}

/// Sign changes of a vector, ignoring entries within noise of zero. For the
/// n-th eigenstate this equals n - 1 (Sturm oscillation).
inline int count_sign_changes(const std::vector<double>& v) {
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    const double floor = 1e-8 * peak;
    int changes = 0;
    double prev = 0.0;
    for (double x : v) {
        if (std::abs(x) <= floor) continue;
        if (prev != 0.0 && x * prev < 0.0) ++changes;
        prev = x;
    }
    return changes;
}

}  // namespace ncgqw
