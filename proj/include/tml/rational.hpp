#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "tml/errors.hpp"

namespace tml {

using Rational = mpq_class;

// Canonicalizing constructor; mpq_class(n, d) alone does not reduce.
inline Rational rat(long n, long d = 1) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// "p/q" or "p"; whitespace not accepted.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

// Best rational approximation of x with denominator <= max_den, via
// continued fractions. Returns nothing when |x| is too large to represent
// in the search or x is not finite.
std::optional<Rational> rationalize(double x, std::int64_t max_den = std::int64_t(1) << 44,
                                    double rel_tol = 1e-11);

// Gaussian rational: exact element of Q(i).
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(rat(r)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw Error("GaussianRational: division by zero");
        Rational n = b.norm_sq();
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }
};

using GQ = GaussianRational;

inline GQ gq(long re, long im = 0) { return {rat(re), rat(im)}; }

std::string format_gq(const GQ& z);

} // namespace tml
