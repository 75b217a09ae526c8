#pragma once

#include "ncgqw/airy.hpp"
#include "ncgqw/constants.hpp"
#include "ncgqw/reps.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncgqw {

/// Deformation parameters of the two algebras: theta (area) and tau
/// (inverse area). Both are non-negative; how small they must be for the
/// first-order formulas to apply is the caller's concern.
struct DeformationParams {
    double theta = 0.0;  // m^2
    double tau = 0.0;    // m^-2
};

inline void validate(const DeformationParams& p) {
    if (p.theta < 0.0) throw std::domain_error("theta must be non-negative");
    if (p.tau < 0.0) throw std::domain_error("tau must be non-negative");
}

/// One row of the energy table at sharp wavenumber k.
struct SpectrumPoint {
    int n;
    double k;               // 1/m
    double e_commutative;   // J
    double shift_theta;     // J
    double shift_tau;       // J
    double e_total;         // J, always e_commutative + shift_theta + shift_tau
};

/// The explicit first-order reduction rule for the deformed Hamiltonian:
/// drop every monomial containing the transverse position y_s, and drop all
/// terms of combined degree >= 2 in {theta, tau}. The dropped content is a
/// documented choice, not hidden simplification, so the rule is a named value
/// that ends up in CLI output.
struct NeglectPolicy {
    bool drop_transverse_position = true;
    std::optional<int> deformation_degree_cap = 1;

    static NeglectPolicy leading_order() { return {}; }
    static NeglectPolicy none() { return {false, std::nullopt}; }

    std::string describe() const {
        std::string out;
        if (drop_transverse_position) out += "drop monomials containing y_s";
        if (deformation_degree_cap) {
            if (!out.empty()) out += "; ";
            out += "drop terms of total degree >= " +
                   std::to_string(*deformation_degree_cap + 1) + " in {theta, tau}";
        }
        if (out.empty()) out = "none";
        return out;
    }
};

/// Commutative gravitational-well level at sharp transverse wavenumber k:
///   E_{n,k} = -(m g^2 hbar^2 / 2)^{1/3} r_n + hbar^2 k^2 / (2 m).
inline double energy_level(int n, double k, const Constants& c) {
    if (n < 1) throw std::domain_error("energy_level: index must be >= 1");
    const double scale =
        std::cbrt(c.mass * c.g_accel * c.g_accel * c.hbar * c.hbar / 2.0);
    return -scale * airy_zero(n).r + c.hbar * c.hbar * k * k / (2.0 * c.mass);
}

/// First-order level shift on flat noncommutative space: -theta m g k / 2,
/// independent of n. Exact for plane-wave k because the correction commutes
/// with the commutative Hamiltonian.
inline double shift_flat_nc(double k, const DeformationParams& p, const Constants& c) {
    validate(p);
    return -p.theta * c.mass * c.g_accel * k / 2.0 + 0.0;  // + 0.0 folds away -0
}

/// First-order shifts from the position-dependent algebra, returned as the
/// pair (theta part, tau part) = (-theta m g k / 2, -tau hbar^2 / (2 m)).
inline std::pair<double, double> shift_posdep(double k, const DeformationParams& p,
                                              const Constants& c) {
    validate(p);
    return {-p.theta * c.mass * c.g_accel * k / 2.0 + 0.0,
            -p.tau * c.hbar * c.hbar / (2.0 * c.mass) + 0.0};
}

/// Builds H = p_x^2/2m + p_y^2/2m + m g x through the realization's images,
/// expands exactly, then applies the neglect policy. With the leading-order
/// policy this reproduces the first-order reduced Hamiltonians; with the
/// policy disabled it returns the full expansion.
inline OpExpr reduce_hamiltonian(const RepMap& rep, const NeglectPolicy& policy) {
    if (rep.target != heisenberg_context())
        throw std::invalid_argument(
            "reduce_hamiltonian: realization must target the canonical context");
    const ParamScalar half_over_m =
        ParamScalar::rational(1, 2) * ParamScalar::symbol(Param::mass, -1);
    const ParamScalar m_g =
        ParamScalar::symbol(Param::mass) * ParamScalar::symbol(Param::gravity);
    const OpExpr& x = rep.image(0);
    const OpExpr& px = rep.image(2);
    const OpExpr& py = rep.image(3);

    OpExpr h = px * px * half_over_m + py * py * half_over_m + x * m_g;
    if (policy.deformation_degree_cap)
        h = h.truncated(DegreeCaps{}.cap_theta_tau(*policy.deformation_degree_cap));
    if (policy.drop_transverse_position) {
        h = h.filtered([](const Monomial& m) { return m[1] == 0; });
    }
    return h;
}

/// Energy table for n = 1..n_max at fixed k, with both deformation shifts.
inline std::vector<SpectrumPoint> spectrum_table(int n_max, double k,
                                                 const DeformationParams& p,
                                                 const Constants& c) {
    if (n_max < 1) throw std::domain_error("spectrum_table: n_max must be >= 1");
    validate(p);
    const auto [dth, dta] = shift_posdep(k, p, c);
    std::vector<SpectrumPoint> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const double e0 = energy_level(n, k, c);
        rows.push_back({n, k, e0, dth, dta, e0 + dth + dta});
    }
    return rows;
}

}  // namespace ncgqw
