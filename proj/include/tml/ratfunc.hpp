#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "tml/polynomial.hpp"

namespace tml {

// A pole location: finite Gaussian-rational point, or infinity.
struct Pole {
    bool at_infinity = false;
    GQ location;  // meaningful when !at_infinity
    int order = 0;

    friend bool operator==(const Pole& a, const Pole& b) {
        return a.at_infinity == b.at_infinity && a.order == b.order &&
               (a.at_infinity || a.location == b.location);
    }
};

// Exact quotient of polynomials, normalized: gcd cleared, monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(gq(1))) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(const Polynomial& p)
        : num_(p), den_(Polynomial::constant(gq(1))) {}

    static RationalFunction constant(const GQ& v) {
        return RationalFunction(Polynomial::constant(v));
    }
    static RationalFunction identity() { return RationalFunction(Polynomial::identity()); }
    // c / (z - p)^m
    static RationalFunction pole_term(const GQ& c, const GQ& p, int m);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator*(const GQ& s) const;

    RationalFunction derivative() const;

    GQ eval(const GQ& z) const;  // throws PoleHit at a pole
    std::complex<double> eval(const std::complex<double>& z) const;
    double eval_real(double x) const;  // requires all_real coefficients

    // True iff numerator and denominator have all-real coefficients after
    // normalization; equivalent to G(conj(b)) == conj(G(b)) for rational G.
    bool is_conjugate_symmetric() const;

    // Distinct finite poles with orders, plus infinity when deg num > deg den.
    // Exact mode: throws IrrationalPole when a denominator root is not
    // Gaussian-rational.
    std::vector<Pole> poles_with_orders() const;
    // Numeric fallback: clusters denominator roots to tolerance 1e-10.
    std::vector<std::pair<std::complex<double>, int>> poles_numeric() const;

    // Coefficient of (z - p)^{-1} in the Laurent expansion at p; 0 when p is
    // not a pole. Exact, via the (m-1)-fold derivative of (z-p)^m * r.
    GQ residue_at(const GQ& p) const;
    GQ residue_at_infinity() const;
    // Laurent coefficient of (z - p)^{-m} at p (m >= 1).
    GQ laurent_coeff(const GQ& p, int m) const;

    // Order of the pole at p (0 when regular there).
    int pole_order_at(const GQ& p) const;

private:
    void normalize();
    Polynomial num_, den_;
};

struct PartialFractionTerm {
    GQ pole;
    int order = 1;       // m >= 1
    GQ coefficient;      // c in c/(z - pole)^m
};

struct PartialFractions {
    Polynomial polynomial_part;
    std::vector<PartialFractionTerm> terms;

    RationalFunction resum() const;
};

// Exact decomposition over Gaussian-rational poles; throws IrrationalPole
// when the denominator does not factor into Gaussian-rational linear factors.
PartialFractions partial_fractions(const RationalFunction& r);

// Full linear factorization over Q(i): roots with multiplicities.
// Throws IrrationalPole when not possible.
std::vector<std::pair<GQ, int>> exact_roots(const Polynomial& p);

// Numeric roots (Durand-Kerner on the square-free part, multiplicity by
// clustering against the full polynomial).
std::vector<std::pair<std::complex<double>, int>> numeric_roots(const Polynomial& p,
                                                                double cluster_tol = 1e-10);

} // namespace tml
