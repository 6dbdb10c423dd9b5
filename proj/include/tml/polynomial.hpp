#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "tml/rational.hpp"

namespace tml {

// Dense univariate polynomial over Q(i), coefficients ascending by degree.
// Zero polynomial is an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GQ> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<GQ> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const GQ& v) { return Polynomial({v}); }
    static Polynomial identity() { return Polynomial({gq(0), gq(1)}); }  // z
    // (z - p)
    static Polynomial linear(const GQ& p) { return Polynomial({-p, gq(1)}); }

    const std::vector<GQ>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    GQ coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : gq(0);
    }
    GQ leading() const { return c_.empty() ? gq(0) : c_.back(); }

    bool all_real() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const GQ& s) const;

    Polynomial derivative() const;
    // Termwise antiderivative with zero constant.
    Polynomial antiderivative() const;
    Polynomial pow(int n) const;
    // Coefficients reversed: z^deg * p(1/z).
    Polynomial reversed() const;

    GQ eval(const GQ& z) const;
    std::complex<double> eval(const std::complex<double>& z) const;

    // Quotient and remainder; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    // Monic gcd.
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial monic() const;

private:
    void trim();
    std::vector<GQ> c_;
};

} // namespace tml
