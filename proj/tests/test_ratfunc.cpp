#include <doctest.h>

#include <complex>
#include <random>

#include "oracles.hpp"
#include "tml/ratfunc.hpp"

using namespace tml;

namespace {

RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den) {
    std::vector<GQ> n, d;
    for (long v : num) n.push_back(gq(v));
    for (long v : den) d.push_back(gq(v));
    return {Polynomial(std::move(n)), Polynomial(std::move(d))};
}

const RationalFunction one_over_z = rf({1}, {0, 1});

// Random rational function with simple/small poles on distinct integers.
RationalFunction random_rational(std::mt19937& rng, int max_poles = 3) {
    std::uniform_int_distribution<int> npoles(1, max_poles);
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<int> ord(1, 3);
    std::vector<long> locs = {-3, -1, 0, 2, 4};
    std::shuffle(locs.begin(), locs.end(), rng);
    int n = npoles(rng);
    RationalFunction acc = RationalFunction::constant(gq(coef(rng)));
    for (int i = 0; i < n; ++i) {
        int m = ord(rng);
        for (int j = 1; j <= m; ++j) {
            long c = coef(rng);
            if (c == 0) c = 1;
            acc = acc + RationalFunction::pole_term(gq(c), gq(locs[i]), j);
        }
    }
    return acc;
}

} // namespace

TEST_CASE("arithmetic and normalization") {
    CHECK(one_over_z * one_over_z == rf({1}, {0, 0, 1}));
    auto z = RationalFunction::identity();
    CHECK((z + (-z)).is_zero());
    CHECK(rf({-1, 0, 1}, {-1, 1}) == rf({1, 1}, {1}));  // (z^2-1)/(z-1) = z+1
    CHECK_THROWS_AS(z / RationalFunction(), DivisionByZeroFunction);
}

TEST_CASE("residues at finite points") {
    CHECK(rf({2}, {0, 1}).residue_at(gq(0)) == gq(2));
    CHECK(rf({1}, {1, -2, 1}).residue_at(gq(1)) == gq(0));  // 1/(z-1)^2
    // z/((z-1)(z+1)) at 1 -> 1/2; oracle: numeric contour integral.
    auto r = rf({0, 1}, {-1, 0, 1});
    GQ res = r.residue_at(gq(1));
    CHECK(res == GQ(rat(1, 2)));
    auto numeric = oracles::contour_residue(
        [&](std::complex<double> zz) { return r.eval(zz); }, {1.0, 0.0}, 0.3);
    CHECK(std::abs(numeric - res.to_complex()) <= 1e-10);
}

TEST_CASE("residue at infinity") {
    CHECK(one_over_z.residue_at_infinity() == gq(-1));
    CHECK(RationalFunction::constant(gq(1)).residue_at_infinity() == gq(0));
    auto r = RationalFunction::pole_term(gq(2), gq(0), 1) +
             RationalFunction::pole_term(gq(1), gq(3), 1);
    CHECK(r.residue_at_infinity() == gq(-3));
}

TEST_CASE("residue sum identity on random rationals") {
    std::mt19937 rng(23);
    for (int t = 0; t < 50; ++t) {
        auto r = random_rational(rng);
        GQ sum = r.residue_at_infinity();
        for (const auto& p : r.poles_with_orders())
            if (!p.at_infinity) sum += r.residue_at(p.location);
        CHECK(sum == gq(0));
    }
}

TEST_CASE("residue matches contour oracle on random rationals") {
    std::mt19937 rng(29);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        auto r = random_rational(rng);
        for (const auto& p : r.poles_with_orders()) {
            if (p.at_infinity) continue;
            std::complex<double> exact = r.residue_at(p.location).to_complex();
            auto numeric = oracles::contour_residue(
                [&](std::complex<double> zz) { return r.eval(zz); },
                p.location.to_complex(), 0.4);
            double scale = std::max(1.0, std::abs(exact));
            CHECK(std::abs(numeric - exact) <= 1e-8 * scale);
            ++checked;
        }
    }
    CHECK(checked > 40);
}

TEST_CASE("poles with orders") {
    CHECK(rf({1}, {0, 0, 1}).poles_with_orders() ==
          std::vector<Pole>{{false, gq(0), 2}});
    CHECK(rf({0, 0, 0, 1}, {1}).poles_with_orders() ==
          std::vector<Pole>{{true, {}, 3}});
    // 1/((z-1)^2 (z+1))
    auto r = RationalFunction(Polynomial::constant(gq(1)),
                              Polynomial::linear(gq(1)).pow(2) * Polynomial::linear(gq(-1)));
    auto ps = r.poles_with_orders();
    REQUIRE(ps.size() == 2);
    CHECK(ps[0] == Pole{false, gq(-1), 1});
    CHECK(ps[1] == Pole{false, gq(1), 2});
}

TEST_CASE("irrational pole rejected in exact mode, numeric fallback works") {
    auto r = rf({1}, {-2, 0, 1});  // 1/(z^2-2)
    CHECK_THROWS_AS(r.poles_with_orders(), IrrationalPole);
    auto np = r.poles_numeric();
    REQUIRE(np.size() == 2);
    double s2 = std::sqrt(2.0);
    for (const auto& [loc, ord] : np) {
        CHECK(ord == 1);
        CHECK(std::min(std::abs(loc - s2), std::abs(loc + s2)) < 1e-10);
    }
}

TEST_CASE("gaussian-rational poles handled exactly") {
    // 1/(z^2+1) has poles at +-i with residues -+ i/2.
    auto r = rf({1}, {1, 0, 1});
    auto ps = r.poles_with_orders();
    REQUIRE(ps.size() == 2);
    CHECK(r.residue_at(gq(0, 1)) == GQ(rat(0), rat(-1, 2)));
}

TEST_CASE("partial fractions") {
    auto pf = partial_fractions(rf({1}, {-1, 0, 1}));
    CHECK(pf.polynomial_part.is_zero());
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.resum() == rf({1}, {-1, 0, 1}));

    auto pf2 = partial_fractions(rf({1, 1}, {0, 0, 1}));  // (z+1)/z^2
    REQUIRE(pf2.terms.size() == 2);
    CHECK(pf2.resum() == rf({1, 1}, {0, 0, 1}));

    // z^3/(z-1): polynomial part z^2+z+1, term 1/(z-1) (long-division oracle).
    auto pf3 = partial_fractions(rf({0, 0, 0, 1}, {-1, 1}));
    CHECK(pf3.polynomial_part == Polynomial({gq(1), gq(1), gq(1)}));
    REQUIRE(pf3.terms.size() == 1);
    CHECK(pf3.terms[0].coefficient == gq(1));
    CHECK(pf3.terms[0].order == 1);
}

TEST_CASE("partial fraction round trip on random rationals") {
    std::mt19937 rng(31);
    for (int t = 0; t < 50; ++t) {
        auto r = random_rational(rng);
        CHECK(partial_fractions(r).resum() == r);
    }
}

TEST_CASE("conjugate symmetry predicate") {
    CHECK(rf({0, -1}, {1}).is_conjugate_symmetric());  // -z
    auto iz = RationalFunction(Polynomial({gq(0), gq(0, 1)}), Polynomial::constant(gq(1)));
    CHECK_FALSE(iz.is_conjugate_symmetric());
    CHECK(rf({1, 0, 1}, {-2, 1}).is_conjugate_symmetric());
}

TEST_CASE("conjugate symmetry gives real residues at real poles") {
    std::mt19937 rng(37);
    for (int t = 0; t < 50; ++t) {
        auto r = random_rational(rng);  // real coefficients by construction
        REQUIRE(r.is_conjugate_symmetric());
        for (const auto& p : r.poles_with_orders())
            if (!p.at_infinity) CHECK(r.residue_at(p.location).is_real());
    }
}

TEST_CASE("derivative") {
    // d/dz 1/z = -1/z^2
    CHECK(one_over_z.derivative() == rf({-1}, {0, 0, 1}));
}
