#pragma once

#include "ncgqw/complex_rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace ncgqw {

/// The commutative central parameters of the deformed algebras. They are never
/// evaluated numerically inside the symbolic layer.
enum class Param : int { hbar = 0, theta = 1, tau = 2, mass = 3, gravity = 4 };

inline constexpr int kParamCount = 5;
inline constexpr std::array<const char*, kParamCount> kParamNames{"hbar", "theta", "tau", "m",
                                                                  "g"};

/// Signed exponent vector over the parameters. Negative exponents are allowed
/// (the Bopp shifts carry 1/hbar factors).
using ParamExponents = std::array<int, kParamCount>;

/// Degree limits used by truncation. A term survives when every capped
/// parameter exponent is within its cap and, if set, the combined degree in
/// {theta, tau} is within the joint cap.
struct DegreeCaps {
    std::array<std::optional<int>, kParamCount> per_param{};
    std::optional<int> theta_tau_total{};

    DegreeCaps& cap(Param p, int max_degree) {
        per_param[static_cast<int>(p)] = max_degree;
        return *this;
    }
    DegreeCaps& cap_theta_tau(int max_degree) {
        theta_tau_total = max_degree;
        return *this;
    }

    bool keeps(const ParamExponents& e) const {
        for (int p = 0; p < kParamCount; ++p) {
            if (per_param[p] && e[p] > *per_param[p]) return false;
        }
        if (theta_tau_total) {
            int d = e[static_cast<int>(Param::theta)] + e[static_cast<int>(Param::tau)];
            if (d > *theta_tau_total) return false;
        }
        return true;
    }
};

/// Exact scalar: a sum of complex-rational coefficients times monomials in the
/// formal parameters. Terms are keyed by exponent vector, so representation is
/// canonical and equality is a map comparison.
class ParamScalar {
public:
    ParamScalar() = default;  // zero

    static ParamScalar integer(long v) { return of(ComplexRational(v)); }
    static ParamScalar rational(long num, long den) {
        return of(ComplexRational(Rational(num, den)));
    }
    static ParamScalar i() { return of(ComplexRational::imaginary()); }
    static ParamScalar of(ComplexRational c) {
        ParamScalar s;
        s.add_term(ParamExponents{}, c);
        return s;
    }
    static ParamScalar symbol(Param p, int exponent = 1) {
        ParamExponents e{};
        e[static_cast<int>(p)] = exponent;
        ParamScalar s;
        s.add_term(e, ComplexRational(1));
        return s;
    }
    static ParamScalar term(ComplexRational c, ParamExponents e) {
        ParamScalar s;
        s.add_term(e, c);
        return s;
    }

    const std::map<ParamExponents, ComplexRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == ParamExponents{} &&
               terms_.begin()->second == ComplexRational(1);
    }

    /// Complex conjugation: i -> -i. Parameters are real, exponents untouched.
    ParamScalar conjugate() const {
        ParamScalar r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conjugate());
        return r;
    }

    ParamScalar truncated(const DegreeCaps& caps) const {
        ParamScalar r;
        for (const auto& [e, c] : terms_) {
            if (caps.keeps(e)) r.terms_.emplace(e, c);
        }
        return r;
    }

    ParamScalar& operator+=(const ParamScalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ParamScalar& operator-=(const ParamScalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
    friend ParamScalar operator-(const ParamScalar& a) {
        ParamScalar r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
        ParamScalar r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                ParamExponents e;
                for (int p = 0; p < kParamCount; ++p) e[p] = ea[p] + eb[p];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }

    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

    /// True when the single leading coefficient renders with a minus sign.
    bool display_negative() const {
        return !terms_.empty() && terms_.begin()->second.display_negative();
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            ComplexRational coeff = c;
            if (first) {
                first = false;
            } else if (coeff.display_negative()) {
                out += " - ";
                coeff = -coeff;
            } else {
                out += " + ";
            }
            out += render_term(coeff, e);
        }
        return out;
    }

private:
    std::map<ParamExponents, ComplexRational> terms_;

    void add_term(const ParamExponents& e, const ComplexRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static std::string render_term(const ComplexRational& c, const ParamExponents& e) {
        std::string mono;
        for (int p = 0; p < kParamCount; ++p) {
            if (e[p] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += kParamNames[p];
            if (e[p] != 1) mono += "^" + std::to_string(e[p]);
        }
        if (mono.empty()) return c.to_string();
        if (c == ComplexRational(1)) return mono;
        if (c == ComplexRational(-1)) return "-" + mono;
        return c.to_string() + "*" + mono;
    }
};

}  // namespace ncgqw
