#include "tml/polynomial.hpp"

#include "tml/errors.hpp"

namespace tml {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::all_real() const {
    for (const auto& v : c_)
        if (v.im != 0) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    std::vector<GQ> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<GQ> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GQ> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const GQ& s) const {
    std::vector<GQ> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GQ> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * GQ(rat(static_cast<long>(i)));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::antiderivative() const {
    if (c_.empty()) return {};
    std::vector<GQ> r(c_.size() + 1);
    for (size_t i = 0; i < c_.size(); ++i)
        r[i + 1] = c_[i] / GQ(rat(static_cast<long>(i) + 1));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(int n) const {
    Polynomial r = constant(gq(1));
    Polynomial b = *this;
    for (; n > 0; n >>= 1) {
        if (n & 1) r = r * b;
        b = b * b;
    }
    return r;
}

Polynomial Polynomial::reversed() const {
    std::vector<GQ> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
}

GQ Polynomial::eval(const GQ& z) const {
    GQ acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::complex<double> Polynomial::eval(const std::complex<double>& z) const {
    std::complex<double> acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + it->to_complex();
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZeroFunction("polynomial division by zero");
    if (a.degree() < b.degree()) return {{}, a};
    std::vector<GQ> rem = a.c_;
    std::vector<GQ> quot(a.degree() - b.degree() + 1);
    GQ lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        GQ q = rem[k + b.degree()] / lead;
        quot[k] = q;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * b.c_[i];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * (GQ(rat(1)) / leading());
}

} // namespace tml
