#include "tml/ratfunc.hpp"

#include <algorithm>
#include <cmath>

#include "tml/errors.hpp"

namespace tml {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroFunction("denominator identically zero");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(gq(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    GQ inv = gq(1) / den_.leading();
    num_ = num_ * inv;
    den_ = den_ * inv;
}

RationalFunction RationalFunction::pole_term(const GQ& c, const GQ& p, int m) {
    return RationalFunction(Polynomial::constant(c), Polynomial::linear(p).pow(m));
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZeroFunction("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator*(const GQ& s) const {
    return RationalFunction(num_ * s, den_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                            den_ * den_);
}

GQ RationalFunction::eval(const GQ& z) const {
    GQ d = den_.eval(z);
    if (d.is_zero()) throw Error("exact evaluation at a pole");
    return num_.eval(z) / d;
}

std::complex<double> RationalFunction::eval(const std::complex<double>& z) const {
    return num_.eval(z) / den_.eval(z);
}

double RationalFunction::eval_real(double x) const {
    return eval(std::complex<double>(x, 0.0)).real();
}

bool RationalFunction::is_conjugate_symmetric() const {
    // Denominator is monic, so the normalization is canonical.
    return num_.all_real() && den_.all_real();
}

int RationalFunction::pole_order_at(const GQ& p) const {
    Polynomial lin = Polynomial::linear(p);
    Polynomial d = den_;
    int m = 0;
    while (!d.is_zero() && d.eval(p).is_zero()) {
        d = Polynomial::divmod(d, lin).first;
        ++m;
    }
    return m;
}

GQ RationalFunction::laurent_coeff(const GQ& p, int m) const {
    int ord = pole_order_at(p);
    if (m > ord) return gq(0);
    // (z-p)^ord * r is regular at p; the wanted coefficient is its
    // (ord-m)-th Taylor coefficient there.
    RationalFunction h(num_ * Polynomial::linear(p).pow(ord), den_);
    for (int i = 0; i < ord - m; ++i) h = h.derivative();
    GQ v = h.eval(p);
    Rational fact(1);
    for (int i = 2; i <= ord - m; ++i) fact *= i;
    return v / GQ(fact);
}

GQ RationalFunction::residue_at(const GQ& p) const { return laurent_coeff(p, 1); }

GQ RationalFunction::residue_at_infinity() const {
    // -Res_0 of r(1/w)/w^2.
    int dn = num_.degree(), dd = den_.degree();
    if (dn < 0) return gq(0);
    // r(1/w) = w^{dd-dn} rev(num)(w) / rev(den)(w)
    Polynomial n = num_.reversed();
    Polynomial d = den_.reversed();
    int shift = dd - dn - 2;  // additional 1/w^2
    if (shift >= 0)
        n = n * Polynomial::identity().pow(shift);
    else
        d = d * Polynomial::identity().pow(-shift);
    return -RationalFunction(std::move(n), std::move(d)).residue_at(gq(0));
}

// ---------------------------------------------------------------------------
// Root finding

namespace {

std::vector<std::complex<double>> durand_kerner(const Polynomial& sqfree) {
    int n = sqfree.degree();
    std::vector<std::complex<double>> c(n + 1);
    std::complex<double> lead = sqfree.leading().to_complex();
    for (int i = 0; i <= n; ++i) c[i] = sqfree.coeff(i).to_complex() / lead;
    auto evalm = [&](std::complex<double> z) {
        std::complex<double> r = 0.0;
        for (int i = n; i >= 0; --i) r = r * z + c[i];
        return r;
    };
    std::vector<std::complex<double>> x(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc = 1.0;
    for (int i = 0; i < n; ++i) {
        acc *= seed;
        x[i] = acc;
    }
    for (int it = 0; it < 500; ++it) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> numv = evalm(x[i]);
            std::complex<double> denv = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) denv *= (x[i] - x[j]);
            std::complex<double> delta = numv / denv;
            x[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14) break;
    }
    // Newton polish.
    Polynomial d = sqfree.derivative();
    for (auto& r : x)
        for (int it = 0; it < 8; ++it) {
            std::complex<double> dv = d.eval(r);
            if (std::abs(dv) < 1e-300) break;
            r -= sqfree.eval(r) / dv;
        }
    return x;
}

std::optional<GQ> rationalize_gq(std::complex<double> z) {
    double re = z.real(), im = z.imag();
    if (std::fabs(re) < 1e-12) re = 0.0;
    if (std::fabs(im) < 1e-12) im = 0.0;
    auto r = rationalize(re);
    auto i = rationalize(im);
    if (!r || !i) return std::nullopt;
    return GQ{*r, *i};
}

} // namespace

std::vector<std::pair<GQ, int>> exact_roots(const Polynomial& p) {
    if (p.is_zero()) throw Error("exact_roots of the zero polynomial");
    if (p.degree() == 0) return {};
    Polynomial g = Polynomial::gcd(p, p.derivative());
    Polynomial sqfree = (g.degree() > 0) ? Polynomial::divmod(p, g).first : p;
    sqfree = sqfree.monic();

    std::vector<std::pair<GQ, int>> out;
    Polynomial rem = p.monic();
    for (const auto& approx : durand_kerner(sqfree)) {
        auto cand = rationalize_gq(approx);
        if (!cand || !sqfree.eval(*cand).is_zero())
            throw IrrationalPole("root is not Gaussian-rational (approx " +
                                 std::to_string(approx.real()) + "+" +
                                 std::to_string(approx.imag()) + "i)");
        Polynomial lin = Polynomial::linear(*cand);
        int mult = 0;
        while (!rem.is_zero() && rem.eval(*cand).is_zero()) {
            rem = Polynomial::divmod(rem, lin).first;
            ++mult;
        }
        out.push_back({*cand, mult});
    }
    if (rem.degree() != 0)
        throw IrrationalPole("incomplete factorization over Q(i)");
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.re != b.first.re) return a.first.re < b.first.re;
        return a.first.im < b.first.im;
    });
    return out;
}

std::vector<std::pair<std::complex<double>, int>> numeric_roots(const Polynomial& p,
                                                                double cluster_tol) {
    if (p.is_zero() || p.degree() == 0) return {};
    Polynomial g = Polynomial::gcd(p, p.derivative());
    Polynomial sqfree = (g.degree() > 0) ? Polynomial::divmod(p, g).first : p;
    auto distinct = durand_kerner(sqfree.monic());
    auto inner = numeric_roots(g, cluster_tol);
    std::vector<std::pair<std::complex<double>, int>> out;
    for (const auto& r : distinct) {
        int mult = 1;
        for (const auto& [ri, mi] : inner)
            if (std::abs(r - ri) < cluster_tol) mult += mi;
        out.push_back({r, mult});
    }
    return out;
}

std::vector<Pole> RationalFunction::poles_with_orders() const {
    std::vector<Pole> out;
    for (const auto& [loc, ord] : exact_roots(den_))
        out.push_back({false, loc, ord});
    if (num_.degree() > den_.degree())
        out.push_back({true, {}, num_.degree() - den_.degree()});
    return out;
}

std::vector<std::pair<std::complex<double>, int>> RationalFunction::poles_numeric() const {
    return numeric_roots(den_);
}

// ---------------------------------------------------------------------------
// Partial fractions

RationalFunction PartialFractions::resum() const {
    RationalFunction acc{polynomial_part};
    for (const auto& t : terms)
        acc = acc + RationalFunction::pole_term(t.coefficient, t.pole, t.order);
    return acc;
}

PartialFractions partial_fractions(const RationalFunction& r) {
    PartialFractions pf;
    auto [q, rem] = Polynomial::divmod(r.num(), r.den());
    pf.polynomial_part = q;
    for (const auto& [loc, ord] : exact_roots(r.den())) {
        for (int m = ord; m >= 1; --m) {
            GQ c = r.laurent_coeff(loc, m);
            if (!c.is_zero()) pf.terms.push_back({loc, m, c});
        }
    }
    (void)rem;
    return pf;
}

} // namespace tml
