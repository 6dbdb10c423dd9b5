#include "tml/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace tml {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ConfigError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ConfigError("bad rational literal: " + s);
    if (q.get_den() == 0) throw ConfigError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_str();
}

std::string format_gq(const GQ& z) {
    if (z.im == 0) return format_rational(z.re);
    return format_rational(z.re) + (z.im > 0 ? "+" : "-") +
           format_rational(abs(z.im)) + "i";
}

std::optional<Rational> rationalize(double x, std::int64_t max_den, double rel_tol) {
    if (!std::isfinite(x)) return std::nullopt;
    if (std::fabs(x) > 1e15) return std::nullopt;
    const double target = x;
    double v = x;
    // Continued fraction convergents p/q.
    std::int64_t p0 = 1, q0 = 0, p1 = 0, q1 = 1;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 9e17 || fl < -9e17) break;
        std::int64_t a = static_cast<std::int64_t>(fl);
        std::int64_t p2 = a * p0 + p1;
        std::int64_t q2 = a * q0 + q1;
        if (q2 < 0 || q2 > max_den) break;
        p1 = p0; q1 = q0; p0 = p2; q0 = q2;
        double approx = static_cast<double>(p0) / static_cast<double>(q0);
        if (std::fabs(approx - target) <= rel_tol * std::max(1.0, std::fabs(target))) {
            mpq_class q(p0, q0);
            q.canonicalize();
            return q;
        }
        double frac = v - fl;
        if (frac < 1e-18) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

} // namespace tml
