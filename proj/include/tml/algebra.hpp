#pragma once

#include <cmath>
#include <complex>

#include "tml/errors.hpp"
#include "tml/rational.hpp"

namespace tml {

// Scalar backends: exact (Rational) for algebraic identities and the period
// solver, double for surface evaluation. The complex type over each backend:
template <typename S> struct scalar_traits;
template <> struct scalar_traits<Rational> {
    using complex_type = GQ;
    static Rational creal(const GQ& z) { return z.re; }
    static Rational cimag(const GQ& z) { return z.im; }
    static GQ make(const Rational& re, const Rational& im) { return {re, im}; }
    static GQ cconj(const GQ& z) { return z.conj(); }
    static bool abs_le(const Rational& a, const Rational& b) { return abs(a) <= b; }
};
template <> struct scalar_traits<double> {
    using complex_type = std::complex<double>;
    static double creal(const std::complex<double>& z) { return z.real(); }
    static double cimag(const std::complex<double>& z) { return z.imag(); }
    static std::complex<double> make(double re, double im) { return {re, im}; }
    static std::complex<double> cconj(const std::complex<double>& z) { return std::conj(z); }
    static bool abs_le(double a, double b) { return std::fabs(a) <= b; }
};

template <typename S> struct IdempotentPair {
    using C = typename scalar_traits<S>::complex_type;
    C beta1{};  // component on e = (1+k)/2
    C beta2{};  // component on e† = (1-k)/2

    friend bool operator==(const IdempotentPair& a, const IdempotentPair& b) {
        return a.beta1 == b.beta1 && a.beta2 == b.beta2;
    }
};

// x + k·y in the split-complex (hyperbolic) plane D.
template <typename S> struct SplitComplex {
    S x{};
    S y{};

    friend bool operator==(const SplitComplex& a, const SplitComplex& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend SplitComplex operator+(const SplitComplex& a, const SplitComplex& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend SplitComplex operator-(const SplitComplex& a, const SplitComplex& b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend SplitComplex operator*(const SplitComplex& a, const SplitComplex& b) {
        return {a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x};
    }
};

// |z|^2_D = x^2 - y^2; indefinite, may be negative or zero.
template <typename S> S split_norm_sq(const SplitComplex<S>& z) {
    return z.x * z.x - z.y * z.y;
}

template <typename S> bool is_zero_divisor(const SplitComplex<S>& z) {
    if (z.x == S(0) && z.y == S(0)) return false;
    return z.x * z.x == z.y * z.y;
}

// Coordinates in the basis {1, i, j, k}, k = ij, i^2 = j^2 = -1, k^2 = 1.
template <typename S> struct Bicomplex {
    S x1{}, x2{}, x3{}, x4{};

    using T = scalar_traits<S>;
    using C = typename T::complex_type;

    Bicomplex() = default;
    Bicomplex(S a, S b, S c, S d)
        : x1(std::move(a)), x2(std::move(b)), x3(std::move(c)), x4(std::move(d)) {}

    // z = z1 + j z2 with z1, z2 in C(i).
    C z1() const { return T::make(x1, x2); }
    C z2() const { return T::make(x3, x4); }
    static Bicomplex from_parts(const C& z1, const C& z2) {
        return {T::creal(z1), T::cimag(z1), T::creal(z2), T::cimag(z2)};
    }

    friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
        return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3 && a.x4 == b.x4;
    }
    Bicomplex operator-() const { return {-x1, -x2, -x3, -x4}; }
    friend Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
        return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x4 + b.x4};
    }
    friend Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
        return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x4 - b.x4};
    }
    friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
        // (z1 + j z2)(w1 + j w2) = (z1 w1 - z2 w2) + j (z1 w2 + z2 w1)
        C p1 = a.z1() * b.z1() - a.z2() * b.z2();
        C p2 = a.z1() * b.z2() + a.z2() * b.z1();
        return from_parts(p1, p2);
    }

    bool is_zero() const { return x1 == S(0) && x2 == S(0) && x3 == S(0) && x4 == S(0); }
};

template <typename S> Bicomplex<S> bc_one() { return {S(1), S(0), S(0), S(0)}; }
template <typename S> Bicomplex<S> bc_i() { return {S(0), S(1), S(0), S(0)}; }
template <typename S> Bicomplex<S> bc_j() { return {S(0), S(0), S(1), S(0)}; }
template <typename S> Bicomplex<S> bc_k() { return {S(0), S(0), S(0), S(1)}; }

inline Bicomplex<Rational> bc_e() { return {rat(1, 2), rat(0), rat(0), rat(1, 2)}; }
inline Bicomplex<Rational> bc_e_dagger() { return {rat(1, 2), rat(0), rat(0), rat(-1, 2)}; }

// beta1 = z1 - i z2, beta2 = z1 + i z2.
template <typename S> IdempotentPair<S> to_idempotent(const Bicomplex<S>& z) {
    using T = scalar_traits<S>;
    return {T::make(z.x1 + z.x4, z.x2 - z.x3), T::make(z.x1 - z.x4, z.x2 + z.x3)};
}

// z = beta1 e + beta2 e†.
template <typename S> Bicomplex<S> from_idempotent(const IdempotentPair<S>& p) {
    using T = scalar_traits<S>;
    S half = S(1) / S(2);
    return {(T::creal(p.beta1) + T::creal(p.beta2)) * half,
            (T::cimag(p.beta1) + T::cimag(p.beta2)) * half,
            (T::cimag(p.beta2) - T::cimag(p.beta1)) * half,
            (T::creal(p.beta1) - T::creal(p.beta2)) * half};
}

// z* = conj(z1) - j conj(z2); in idempotent coordinates conjugates both betas.
template <typename S> Bicomplex<S> star(const Bicomplex<S>& z) {
    return {z.x1, -z.x2, -z.x3, z.x4};
}

// Nonzero z with z1^2 + z2^2 = 0, i.e. exactly one idempotent component zero.
template <typename S> bool is_zero_divisor(const Bicomplex<S>& z) {
    if (z.is_zero()) return false;
    using C = typename Bicomplex<S>::C;
    C s = z.z1() * z.z1() + z.z2() * z.z2();
    return s == C{};
}

template <typename S>
SplitComplex<S> split_restrict(const Bicomplex<S>& z, const S& tol = S(0)) {
    using T = scalar_traits<S>;
    if (!T::abs_le(z.x2, tol) || !T::abs_le(z.x3, tol))
        throw NotInSplitPlane("split_restrict: nonzero i/j components");
    return {z.x1, z.x4};
}

} // namespace tml
