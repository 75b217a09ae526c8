#pragma once

#include "ncgqw/constants.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>
#include <limits>
#include <stdexcept>
#include <utility>

namespace ncgqw {

namespace airy_detail {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline const BigFloat& ai_origin() {
    static const BigFloat v("0.3550280538878172392600631860041831763979791741991772406");
    return v;
}
inline const BigFloat& aip_origin() {
    static const BigFloat v("-0.2588194037928067984051835601892039634790911383549345822");
    return v;
}

/// Series/asymptotic handoff radius. The Maclaurin branch runs in 50-digit
/// floats, which absorbs the ~16 digits of cancellation at z = +9; at |z| = 9
/// the asymptotic remainder is already below 1e-14 relative, so both branches
/// agree to full double precision across the seam.
inline constexpr double kSeriesRadius = 9.0;

/// Maclaurin evaluation of (Ai, Ai') via the standard f/g pair, carried out in
/// extended precision to survive the cancellation between the two sums.
inline std::pair<double, double> maclaurin(double zd) {
    const BigFloat z = zd;
    const BigFloat z3 = z * z * z;

    BigFloat f = 1, fterm = 1;          // sum_k 3^k (1/3)_k z^{3k} / (3k)!
    BigFloat g = z, gterm = z;          // sum_k 3^k (2/3)_k z^{3k+1} / (3k+1)!
    BigFloat gp = 1, gpterm = 1;        // g'
    BigFloat fp = z * z / 2, fpterm = fp;  // f'

    const BigFloat tiny("1e-70");
    for (int k = 0; k < 400; ++k) {
        fterm *= z3 / ((3 * k + 2) * (3 * k + 3));
        gterm *= z3 / ((3 * k + 3) * (3 * k + 4));
        gpterm *= z3 / ((3 * k + 1) * (3 * k + 3));
        if (k >= 1) fpterm *= z3 / ((3 * k) * (3 * k + 2));
        f += fterm;
        g += gterm;
        gp += gpterm;
        if (k >= 1) fp += fpterm;
        if (abs(fterm) < tiny && abs(gterm) < tiny && abs(gpterm) < tiny &&
            abs(fpterm) < tiny)
            break;
    }
    BigFloat ai = ai_origin() * f + aip_origin() * g;
    BigFloat aip = ai_origin() * fp + aip_origin() * gp;
    return {static_cast<double>(ai), static_cast<double>(aip)};
}

/// Large positive z: Ai ~ e^{-zeta} / (2 sqrt(pi) z^{1/4}) * sum (-1)^k u_k zeta^-k.
inline std::pair<double, double> asymptotic_positive(double z) {
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    double u = 1.0, su = 0.0, sv = 0.0, zp = 1.0, sign = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 80; ++k) {
        double v = (k == 0) ? 1.0 : u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        double term = u * zp;
        if (std::abs(term) > prev) break;  // divergent tail reached
        su += sign * term;
        sv += sign * v * zp;
        prev = std::abs(term);
        if (prev < 1e-20) break;
        u *= (6.0 * k + 1.0) * (6.0 * k + 5.0) / (72.0 * (k + 1.0));
        zp /= zeta;
        sign = -sign;
    }
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    const double q = std::pow(z, 0.25);
    const double damp = std::exp(-zeta);
    return {damp * su / (2.0 * sqrt_pi * q), -q * damp * sv / (2.0 * sqrt_pi)};
}

/// Large negative z (argument -t, t > 0): oscillatory expansion with the
/// even/odd split of the u_k, v_k coefficients.
inline std::pair<double, double> asymptotic_negative(double t) {
    const double zeta = 2.0 / 3.0 * t * std::sqrt(t);
    const double chi = zeta - std::numbers::pi / 4.0;
    double P = 0.0, Q = 0.0, R = 0.0, S = 0.0;
    double u = 1.0, zp = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 80; ++k) {
        double v = (k == 0) ? 1.0 : u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        double term = u * zp;
        if (std::abs(term) > prev) break;
        prev = std::abs(term);
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            P += sign * term;
            R += sign * v * zp;
        } else {
            Q += sign * term;
            S += sign * v * zp;
        }
        if (prev < 1e-20) break;
        u *= (6.0 * k + 1.0) * (6.0 * k + 5.0) / (72.0 * (k + 1.0));
        zp /= zeta;
    }
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    const double q = std::pow(t, 0.25);
    double ai = (std::cos(chi) * P + std::sin(chi) * Q) / (sqrt_pi * q);
    double aip = q * (std::sin(chi) * R - std::cos(chi) * S) / sqrt_pi;
    return {ai, aip};
}

inline std::pair<double, double> ai_pair(double z) {
    if (!std::isfinite(z)) throw std::domain_error("ai: argument must be finite");
    if (std::abs(z) <= kSeriesRadius) return maclaurin(z);
    if (z > 0) {
        if (z > 108.0) return {0.0, 0.0};  // e^{-zeta} underflows; decay to zero
        return asymptotic_positive(z);
    }
    return asymptotic_negative(-z);
}

}  // namespace airy_detail

/// Airy function of the first kind.
inline double ai(double z) { return airy_detail::ai_pair(z).first; }

/// Derivative of the Airy function.
inline double ai_prime(double z) { return airy_detail::ai_pair(z).second; }

/// One negative real root of Ai, with the residual |Ai(r)| actually achieved.
struct AiryZero {
    int n;           // 1-based index, r_1 > r_2 > ...
    double r;        // the root
    double residual; // |Ai(r)|
};

namespace airy_detail {

/// Asymptotic estimate of the n-th root; within 0.2 of the true root already
/// at n = 1 and improving with n.
inline double zero_estimate(int n) {
    return -std::pow(3.0 * std::numbers::pi * (4.0 * n - 1.0) / 8.0, 2.0 / 3.0);
}

}  // namespace airy_detail

/// n-th negative zero of Ai: Newton from the asymptotic seed, polished to
/// |Ai| <= 1e-12, bisection fallback when a step leaves the seed's bracket.
inline AiryZero airy_zero(int n) {
    if (n < 1) throw std::domain_error("airy_zero: index must be >= 1");
    const double seed = airy_detail::zero_estimate(n);
    double lo = seed - 0.2, hi = seed + 0.2;
    double z = seed;
    bool newton_ok = true;
    for (int it = 0; it < 60; ++it) {
        auto [v, d] = airy_detail::ai_pair(z);
        if (std::abs(v) <= 1e-13) break;
        if (d == 0.0) {
            newton_ok = false;
            break;
        }
        double step = v / d;
        double next = z - step;
        if (next < lo || next > hi) {
            newton_ok = false;
            break;
        }
        z = next;
        if (std::abs(step) < 1e-16 * std::abs(z)) break;
    }
    if (!newton_ok || std::abs(ai(z)) > 1e-12) {
        double flo = ai(lo), fhi = ai(hi);
        if (flo * fhi > 0.0)
            throw std::logic_error("airy_zero: seed bracket does not straddle the root");
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::abs(lo); ++it) {
            double mid = 0.5 * (lo + hi);
            double fm = ai(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if (flo * fm < 0.0) {
                hi = mid;
                fhi = fm;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        z = 0.5 * (lo + hi);
    }
    return AiryZero{n, z, std::abs(ai(z))};
}

/// Integral of Ai^2 from `lower` to +infinity. Adaptive Gauss-Kronrod on
/// [lower, lower + 40]; beyond that cut Ai^2 < e^{-2 zeta(lower+40)}, which is
/// below 1e-100 for every lower >= -25, so the analytic tail is negligible.
inline double ai_squared_integral(double lower) {
    if (lower < -25.0)
        throw std::domain_error("ai_squared_integral: lower limit out of supported range");
    auto f = [](double z) {
        double v = ai(z);
        return v * v;
    };
    double error = 0.0;
    double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, lower, lower + 40.0, 12, 1e-12, &error);
    return value;
}

/// Normalization amplitude of the n-th bound eigenstate:
///   alpha_n = [ (hbar^2 / (2 m^2 g))^{1/3} * I_n ]^{-1/2},
/// where I_n = integral of Ai^2 over [r_n, infinity). The quadrature value is
/// cross-checked against the closed form I_n = Ai'(r_n)^2 before use.
inline double normalization(int n, const Constants& c) {
    if (n < 1) throw std::domain_error("normalization: index must be >= 1");
    const AiryZero zero = airy_zero(n);
    const double by_quadrature = ai_squared_integral(zero.r);
    const double d = ai_prime(zero.r);
    const double by_identity = d * d;
    if (std::abs(by_quadrature - by_identity) > 1e-8 * by_identity)
        throw std::logic_error("normalization: quadrature disagrees with Ai'(r_n)^2");
    const double length_scale =
        std::cbrt(c.hbar * c.hbar / (2.0 * c.mass * c.mass * c.g_accel));
    return 1.0 / std::sqrt(length_scale * by_quadrature);
}

}  // namespace ncgqw
