#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace ncgqw {

/// Arbitrary-precision rational, the coefficient field of the symbolic layer.
using Rational = boost::multiprecision::cpp_rational;

/// Exact complex number with rational real and imaginary parts.
///
/// All arithmetic is exact; there is no rounding anywhere in this type.
struct ComplexRational {
    Rational re{0};
    Rational im{0};

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ComplexRational(long r) : re(r) {}

    static ComplexRational imaginary(Rational i = 1) {
        return ComplexRational(Rational(0), std::move(i));
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ComplexRational conjugate() const { return ComplexRational(re, -im); }

    ComplexRational& operator+=(const ComplexRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator-(const ComplexRational& a) {
        return ComplexRational(-a.re, -a.im);
    }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) {
        return !(a == b);
    }

    /// True when the canonical sign is negative: real part negative, or purely
    /// imaginary with negative imaginary part. Used only for rendering.
    bool display_negative() const { return re < 0 || (re == 0 && im < 0); }

    std::string to_string() const {
        if (is_zero()) return "0";
        auto imag_str = [](const Rational& v) -> std::string {
            if (v == 1) return "i";
            if (v == -1) return "-i";
            return v.str() + "*i";
        };
        if (im == 0) return re.str();
        if (re == 0) return imag_str(im);
        std::string s = "(" + re.str();
        s += (im > 0) ? "+" : "-";
        Rational a = abs(im);
        s += (a == 1) ? "i" : a.str() + "*i";
        s += ")";
        return s;
    }
};

}  // namespace ncgqw
