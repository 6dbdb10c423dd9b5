#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tml/errors.hpp"
#include "tml/surface.hpp"

using namespace tml;

namespace {

RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den) {
    std::vector<GQ> n, d;
    for (long c : num) n.push_back(gq(c));
    for (long c : den) d.push_back(gq(c));
    return RationalFunction(Polynomial(n), Polynomial(d));
}

RationalFunction poly(std::initializer_list<long> coeffs) {
    std::vector<GQ> c;
    for (long v : coeffs) c.push_back(gq(v));
    return RationalFunction(Polynomial(c));
}

BicomplexWeierstrass double_pole_data() {
    WeierstrassPair w(poly({0, -1}), rf({-1}, {0, 0, 1}));
    return assemble_bicomplex(w, w);
}

auto ev(const RationalFunction& r) {
    return [r](std::complex<double> z) { return r.eval(z); };
}

} // namespace

TEST_CASE("closed-form antiderivative") {
    SUBCASE("pure log") {
        auto c = antiderivative(rf({2}, {0, 1}));
        CHECK(c.rational_part.is_zero());
        REQUIRE(c.log_terms.size() == 1);
        CHECK(c.log_terms[0].pole == gq(0));
        CHECK(c.log_terms[0].coeff == rat(2));
    }
    SUBCASE("double pole plus constant") {
        auto c = antiderivative(rf({-1, 0, 1}, {0, 0, 1}));  // -1/z^2 + 1
        CHECK(c.log_terms.empty());
        CHECK(c.rational_part == rf({1, 0, 1}, {0, 1}));  // 1/z + z
    }
    SUBCASE("constant") {
        auto c = antiderivative(poly({1}));
        CHECK(c.rational_part == poly({0, 1}));
        CHECK(c.log_terms.empty());
    }
    SUBCASE("complex residue refused") {
        CHECK_THROWS_AS(antiderivative(rf({1}, {1, 0, 1})), ComplexResidue);
    }
    SUBCASE("derivative returns the integrand exactly") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> coeff(-4, 4);
        const std::vector<long> pole_pool{-2, -1, 0, 1, 3};
        for (int trial = 0; trial < 40; ++trial) {
            RationalFunction r = poly({coeff(rng), coeff(rng)});
            for (long p : pole_pool)
                if (coeff(rng) > 0)
                    for (int m = 1; m <= 1 + trial % 3; ++m)
                        r = r + RationalFunction::pole_term(gq(coeff(rng)), gq(p), m);
            if (r.is_zero()) continue;
            auto c = antiderivative(r);
            CHECK(c.derivative() == r);
        }
    }
}

TEST_CASE("real-part evaluation") {
    auto c = antiderivative(rf({2}, {0, 1}));
    SUBCASE("log difference") {
        CHECK(eval_real_part(c, {3.0, 0.0}, {1.0, 0.0}) ==
              doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-12));
    }
    SUBCASE("zero length") { CHECK(eval_real_part(c, {2.0, 0.0}, {2.0, 0.0}) == 0.0); }
    SUBCASE("polynomial part, complex endpoint") {
        auto lin = antiderivative(poly({1}));
        CHECK(eval_real_part(lin, {2.0, 1.0}, {0.0, 0.0}) == doctest::Approx(2.0));
    }
    SUBCASE("pole proximity raises") {
        CHECK_THROWS_AS(c.eval_raw({0.0, 1e-14}), PoleHit);
    }
}

TEST_CASE("path independence of the real part") {
    // Re of the closed-form integral vs Simpson quadrature along two
    // homotopically distinct routes around the pole at 0.
    WeierstrassPair w(poly({0, -1}), rf({-1}, {0, 0, 1}));
    auto alpha = build_alpha(w);
    std::complex<double> a(-2.0, 0.0), b(1.5, 0.0);
    for (int c = 0; c < 3; ++c) {
        auto ci = antiderivative(alpha[c]);
        double closed = ci.eval_from(b, a);
        double above = oracles::re_path_integral(ev(alpha[c]),
                                                 {oracles::semicircle(a, b, +1)});
        double below = oracles::re_path_integral(ev(alpha[c]),
                                                 {oracles::semicircle(a, b, -1)});
        CHECK(std::abs(above - closed) < 1e-8);
        CHECK(std::abs(below - closed) < 1e-8);
    }
}

TEST_CASE("maximal factor evaluation") {
    SurfaceOptions opt;
    opt.base1 = 1.0;
    opt.base2 = 1.0;
    SurfaceModel m(double_pole_data(), opt);
    SUBCASE("closed form with base 1") {
        auto X = m.eval_maximal(1, {2.0, 0.0});
        CHECK(X[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(X[1] == doctest::Approx(std::log(4.0)).epsilon(1e-12));
        CHECK(X[2] == doctest::Approx(-1.5).epsilon(1e-12));
    }
    SUBCASE("zero at the base point") {
        auto X = m.eval_maximal(1, {1.0, 0.0});
        CHECK(X[0] == 0.0);
        CHECK(X[1] == 0.0);
        CHECK(X[2] == 0.0);
    }
    SUBCASE("general real point matches 1/a + a, ln a^2, 1/a - a") {
        double a = -2.5;
        auto X = m.eval_maximal(1, {a, 0.0});
        CHECK(X[0] == doctest::Approx(1 / a + a - 2.0).epsilon(1e-12));
        CHECK(X[1] == doctest::Approx(std::log(a * a)).epsilon(1e-12));
        CHECK(X[2] == doctest::Approx(1 / a - a - 0.0).epsilon(1e-12));
    }
}

TEST_CASE("timelike surface evaluation") {
    SurfaceOptions opt;  // no base: raw antiderivatives
    SurfaceModel m(double_pole_data(), opt);
    SUBCASE("matches the closed form") {
        for (double x1 : {-2.0, -0.8, 1.3, 2.7})
            for (double x4 : {-1.9, 0.4, 2.2}) {
                if (m.in_exclusion_band(x1, x4)) continue;
                auto X = m.eval_timelike(x1, x4);
                double q = x1 * x1 - x4 * x4;
                CHECK(X[0] == doctest::Approx(x1 / q + x1).epsilon(1e-12));
                CHECK(X[1] == doctest::Approx(std::log(std::fabs(q))).epsilon(1e-12));
                CHECK(X[2] == doctest::Approx(x1 / q - x1).epsilon(1e-12));
            }
    }
    SUBCASE("light-cone band rejected") {
        CHECK_THROWS_AS(m.eval_timelike(1.0, 1.0), LightConeHit);
        CHECK_THROWS_AS(m.eval_timelike(0.51, -0.49), LightConeHit);
    }
    SUBCASE("exclusion lines found") {
        REQUIRE(m.lines1().size() == 1);
        REQUIRE(m.lines2().size() == 1);
        CHECK(m.lines1()[0] == 0.0);
        CHECK(m.lines2()[0] == 0.0);
    }
}

TEST_CASE("metric samples") {
    SurfaceOptions opt;
    SurfaceModel m(double_pole_data(), opt);
    SUBCASE("maximal factors are degenerate on real arguments") {
        // g real-valued on the real axis, so Im g = 0 there.
        MetricSample s = m.metrics_at(2.0, 0.5);
        CHECK(s.h1 == 0.0);
        CHECK(s.h2 == 0.0);
    }
    SUBCASE("h_hat vanishes where g1(x1+x4) = g2(x1-x4)") {
        for (double x1 : {-2.0, 1.0, 2.5}) {
            MetricSample s = m.metrics_at(x1, 0.0);
            CHECK(std::fabs(s.h_hat) < 1e-15);
        }
    }
    SUBCASE("h_hat formula against direct computation") {
        double x1 = 1.7, x4 = 0.6;
        MetricSample s = m.metrics_at(x1, x4);
        double g1 = -(x1 + x4), g2 = -(x1 - x4);
        double f1 = -1.0 / ((x1 + x4) * (x1 + x4)), f2 = -1.0 / ((x1 - x4) * (x1 - x4));
        double im = 0.5 * (g1 - g2);
        double fnorm = f1 * f2;  // split norm = product of idempotent parts
        CHECK(s.h_hat == doctest::Approx(-4.0 * im * im * fnorm).epsilon(1e-12));
        CHECK(s.h_E3 == doctest::Approx(2.0 * std::pow(1.0 + g1 * g2, 2) * fnorm)
                            .epsilon(1e-12));
        CHECK(s.h_E3_abs >= 0.0);
    }
}

TEST_CASE("default base point") {
    CHECK(default_base_point({}) == 0.0);
    CHECK(default_base_point({2.0}) == 3.0);
    CHECK(default_base_point({-1.0, 3.0}) == 1.0);
    CHECK(default_base_point({0.0, 1.0, 5.0}) == 3.0);
}
