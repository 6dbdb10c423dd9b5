#include "tml/surface.hpp"

#include <algorithm>
#include <cmath>

#include "tml/errors.hpp"

namespace tml {

namespace {
constexpr double kPoleEps = 1e-13;
}

ClosedFormIntegral antiderivative(const RationalFunction& r) {
    ClosedFormIntegral out;
    PartialFractions pf = partial_fractions(r);
    RationalFunction rat_part{pf.polynomial_part.antiderivative()};
    for (const auto& t : pf.terms) {
        if (t.order == 1) {
            if (!t.coefficient.is_real())
                throw ComplexResidue("residue " + format_gq(t.coefficient) + " at " +
                                     format_gq(t.pole) + " is not real");
            out.log_terms.push_back({t.pole, t.coefficient.re});
        } else {
            // c/(z-p)^m integrates to -c/(m-1) * (z-p)^{1-m}
            GQ c = -t.coefficient / GQ(rat(t.order - 1));
            rat_part = rat_part + RationalFunction::pole_term(c, t.pole, t.order - 1);
        }
    }
    out.rational_part = std::move(rat_part);
    return out;
}

RationalFunction ClosedFormIntegral::derivative() const {
    RationalFunction acc = rational_part.derivative();
    for (const auto& t : log_terms)
        acc = acc + RationalFunction::pole_term(GQ(t.coeff), t.pole, 1);
    return acc;
}

std::vector<std::complex<double>> ClosedFormIntegral::singular_points() const {
    std::vector<std::complex<double>> pts;
    for (const auto& [loc, ord] : rational_part.poles_numeric()) pts.push_back(loc);
    for (const auto& t : log_terms) pts.push_back(t.pole.to_complex());
    return pts;
}

double ClosedFormIntegral::eval_raw(std::complex<double> z) const {
    for (const auto& p : singular_points())
        if (std::abs(z - p) < kPoleEps) throw PoleHit("evaluation at a pole");
    double v = rational_part.eval(z).real();
    for (const auto& t : log_terms)
        v += t.coeff.get_d() * std::log(std::abs(z - t.pole.to_complex()));
    return v;
}

double ClosedFormIntegral::eval_from(std::complex<double> z, std::complex<double> z0) const {
    return eval_raw(z) - eval_raw(z0);
}

double eval_real_part(const ClosedFormIntegral& c, std::complex<double> z,
                      std::complex<double> z0) {
    return c.eval_from(z, z0);
}

double default_base_point(const std::vector<double>& poles) {
    if (poles.empty()) return 0.0;
    std::vector<double> s = poles;
    std::sort(s.begin(), s.end());
    if (s.size() == 1) return s[0] + 1.0;
    double best_gap = -1.0, best_mid = s[0] - 1.0;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        double gap = s[i + 1] - s[i];
        if (gap > best_gap) {
            best_gap = gap;
            best_mid = 0.5 * (s[i] + s[i + 1]);
        }
    }
    return best_mid;
}

SurfaceModel::SurfaceModel(const BicomplexWeierstrass& data, const SurfaceOptions& opt)
    : data_(data), delta_(opt.delta) {
    auto a1 = build_alpha(data.factor1);
    auto a2 = build_alpha(data.factor2);
    for (int c = 0; c < 3; ++c) {
        comp_[c][0] = antiderivative(a1[c]);
        comp_[c][1] = antiderivative(a2[c]);
    }
    auto collect_lines = [](const WeierstrassPair& w) {
        std::vector<double> out;
        for (const auto& p : alpha_poles(w))
            if (!p.at_infinity && p.location.is_real())
                out.push_back(p.location.re.get_d());
        std::sort(out.begin(), out.end());
        return out;
    };
    lines1_ = collect_lines(data.factor1);
    lines2_ = collect_lines(data.factor2);
    base1_ = opt.base1;
    base2_ = opt.base2;
    if (opt.auto_base) {
        if (!base1_) base1_ = default_base_point(lines1_);
        if (!base2_) base2_ = default_base_point(lines2_);
    }
}

std::array<double, 3> SurfaceModel::eval_maximal(int factor, std::complex<double> z) const {
    std::optional<double> base = (factor == 1) ? base1_ : base2_;
    std::array<double, 3> out{};
    for (int c = 0; c < 3; ++c) {
        const ClosedFormIntegral& ci = comp_[c][factor - 1];
        out[c] = base ? ci.eval_from(z, {*base, 0.0}) : ci.eval_raw(z);
    }
    return out;
}

bool SurfaceModel::in_exclusion_band(double x1, double x4) const {
    for (double p : lines1_)
        if (std::fabs(x1 + x4 - p) < delta_) return true;
    for (double q : lines2_)
        if (std::fabs(x1 - x4 - q) < delta_) return true;
    return false;
}

std::array<double, 3> SurfaceModel::eval_timelike(double x1, double x4) const {
    if (in_exclusion_band(x1, x4))
        throw LightConeHit("point within the light-cone exclusion band");
    auto v1 = eval_maximal(1, {x1 + x4, 0.0});
    auto v2 = eval_maximal(2, {x1 - x4, 0.0});
    return {0.5 * (v1[0] + v2[0]), 0.5 * (v1[1] + v2[1]), 0.5 * (v1[2] + v2[2])};
}

MetricSample SurfaceModel::metrics_at(double x1, double x4) const {
    if (in_exclusion_band(x1, x4))
        throw LightConeHit("point within the light-cone exclusion band");
    std::complex<double> b1(x1 + x4, 0.0), b2(x1 - x4, 0.0);
    std::complex<double> g1 = data_.factor1.g.eval(b1);
    std::complex<double> g2 = data_.factor2.g.eval(b2);
    std::complex<double> f1 = data_.factor1.f.eval(b1);
    std::complex<double> f2 = data_.factor2.f.eval(b2);

    MetricSample s;
    s.h1 = 4.0 * g1.imag() * g1.imag() * std::norm(f1);
    s.h2 = 4.0 * g2.imag() * g2.imag() * std::norm(f2);
    // ghat = g1 e + g2 e†; its split components and indefinite norm.
    s.ghat = {0.5 * (g1.real() + g2.real()), 0.5 * (g1.real() - g2.real())};
    s.fhat = {0.5 * (f1.real() + f2.real()), 0.5 * (f1.real() - f2.real())};
    double gnorm = split_norm_sq(s.ghat);
    double fnorm = split_norm_sq(s.fhat);
    double im_ghat = s.ghat.y;  // Im of a split-complex value is its k-part
    s.h_hat = -4.0 * im_ghat * im_ghat * fnorm;
    double factor = 2.0 * (1.0 + gnorm) * (1.0 + gnorm);
    s.h_E3 = factor * fnorm;
    s.h_E3_abs = factor * std::fabs(fnorm);
    return s;
}

} // namespace tml
