#include "doctest.h"

#include <cmath>

#include "tml/analysis.hpp"
#include "tml/errors.hpp"

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

const WeierstrassPair dbl(poly({0, -1}), rf({-1}, {0, 0, 1}));

double eval_F(const WeierstrassPair& w1, const WeierstrassPair& w2, double x1, double x4) {
    return w1.g.eval_real(x1 + x4) - w2.g.eval_real(x1 - x4);
}

} // namespace

TEST_CASE("singular set extraction") {
    Box box;  // [-3,3]^2
    SUBCASE("equal linear g: the line x4 = 0") {
        SingularCurve s = extract_singular_set(dbl, dbl, box, 100);
        CHECK_FALSE(s.polylines.empty());
        CHECK(s.residual <= 1e-10);
        double cell = 6.0 / 99;
        for (const auto& line : s.polylines)
            for (const auto& v : line) CHECK(std::fabs(v[1]) <= cell);
        CHECK_FALSE(s.bounded_flag);  // the line runs off the box
    }
    SUBCASE("shifted g: the line x4 = 1/2") {
        WeierstrassPair w1(poly({0, 1}), poly({1}));
        WeierstrassPair w2(poly({1, 1}), poly({1}));
        SingularCurve s = extract_singular_set(w1, w2, box, 80);
        CHECK_FALSE(s.polylines.empty());
        for (const auto& line : s.polylines)
            for (const auto& v : line) CHECK(std::fabs(v[1] - 0.5) <= 1e-6);
    }
    SUBCASE("quadratic vs linear: conic zero set, pointwise residual") {
        WeierstrassPair w1(poly({0, 0, 1}), poly({1}));
        WeierstrassPair w2(poly({0, 1}), poly({1}));
        SingularCurve s = extract_singular_set(w1, w2, box, 120);
        CHECK_FALSE(s.polylines.empty());
        size_t count = 0;
        for (const auto& line : s.polylines)
            for (const auto& v : line) {
                CHECK(std::fabs(eval_F(w1, w2, v[0], v[1])) <= 1e-10);
                ++count;
            }
        CHECK(count > 10);
        CHECK(s.residual <= 1e-10);
    }
    SUBCASE("empty result is valid") {
        // F = 1 never vanishes.
        WeierstrassPair w1(poly({1}), poly({1}));
        WeierstrassPair w2(poly({0}), poly({1}));
        SingularCurve s = extract_singular_set(w1, w2, box, 40);
        CHECK(s.polylines.empty());
    }
}

TEST_CASE("compactness and discreteness report") {
    Box box;
    SUBCASE("equal constants: whole-domain case") {
        WeierstrassPair w1(poly({2}), poly({1}));
        WeierstrassPair w2(poly({2}), poly({1}));
        SingularCurve s = extract_singular_set(w1, w2, box, 40);
        auto rep = check_compactness(w1, w2, s, box, {-10, 10}, {-10, 10});
        CHECK(rep.classification == "whole");
    }
    SUBCASE("line case reported as curve") {
        SingularCurve s = extract_singular_set(dbl, dbl, box, 60);
        auto rep = check_compactness(dbl, dbl, s, box, {-10, 10}, {-10, 10});
        CHECK(rep.classification == "curve");
        CHECK(rep.contained);
    }
    SUBCASE("containment failure for small candidate intervals") {
        WeierstrassPair w1(poly({0, 1}), poly({1}));
        WeierstrassPair w2(poly({1, 1}), poly({1}));
        SingularCurve s = extract_singular_set(w1, w2, box, 60);
        auto rep = check_compactness(w1, w2, s, box, {-1, 1}, {-1, 1});
        CHECK_FALSE(rep.contained);
    }
}

TEST_CASE("branch points") {
    SUBCASE("pole-only f has none") {
        CHECK(branch_points(dbl, {-5, 5}).empty());
    }
    SUBCASE("exact rational root") {
        WeierstrassPair w(poly({0}), poly({-1, 1}));
        auto b = branch_points(w, {-5, 5});
        REQUIRE(b.size() == 1);
        CHECK(b[0] == 1.0);
    }
    SUBCASE("irrational root via bisection") {
        WeierstrassPair w(poly({0}), poly({-2, 0, 1}));
        auto b = branch_points(w, {0, 2});
        REQUIRE(b.size() == 1);
        CHECK(std::fabs(b[0] - std::sqrt(2.0)) <= 1e-10);
    }
}

TEST_CASE("end classification") {
    SUBCASE("double-pole data: type (1,1), a=-1, c=2") {
        EndDescriptor d = classify_end(dbl, dbl, 0);
        CHECK(d.simple);
        CHECK(d.combined_type == 1);
        for (int k = 0; k < 2; ++k) {
            CHECK(d.factor[k].a == -1.0);
            CHECK(d.factor[k].c == 2.0);
            CHECK(d.factor[k].type == 1);
        }
        CHECK(d.p1 == 0);
        CHECK(d.p2 == 0);
    }
    SUBCASE("order-3 pole is not simple") {
        WeierstrassPair w(poly({0}), rf({1}, {0, 0, 0, 1}));
        CHECK_THROWS_AS(classify_end(w, w, 0), NotSimpleEnd);
    }
    SUBCASE("degenerate type 1 with c = 0") {
        WeierstrassPair w(poly({0}), rf({1}, {0, 0, 1}));
        EndDescriptor d = classify_end(w, w, 0);
        CHECK(d.factor[0].a == 1.0);
        CHECK(d.factor[0].c == 0.0);
        CHECK(d.factor[0].type == 1);
    }
    SUBCASE("log in the first and third coordinates: type 2") {
        // g = z^2, f = 1/z^2 + 1/z: alpha = ((1-z^4)f, 2 + 2z, (1+z^4)f),
        // residues (1, 0, 1) at 0.
        WeierstrassPair w(poly({0, 0, 1}), rf({1, 1}, {0, 0, 1}));
        EndDescriptor d = classify_end(w, w, 0);
        CHECK(d.factor[0].type == 2);
        CHECK(d.factor[0].a == 1.0);
        CHECK(d.factor[0].c == 1.0);
        CHECK(d.combined_type == 4);
    }
    SUBCASE("mixed pairing maps to combined type 2") {
        WeierstrassPair w2(poly({0, 0, 1}), rf({1, 1}, {0, 0, 1}));
        EndDescriptor d = classify_end(dbl, w2, 0);
        CHECK(d.factor[0].type == 1);
        CHECK(d.factor[1].type == 2);
        CHECK(d.combined_type == 2);
        EndDescriptor r = classify_end(w2, dbl, 0);
        CHECK(r.combined_type == 3);
    }
}

TEST_CASE("asymptotic residuals near a simple end") {
    auto data = assemble_bicomplex(dbl, dbl);
    SurfaceModel m(data, {});
    EndDescriptor d = classify_end(dbl, dbl, 0);
    const std::vector<double> radii{0.2, 0.1, 0.05, 0.025};
    AsymptoticTable t = asymptotic_residual(m, d, radii);
    REQUIRE(t.residuals.size() == radii.size());
    // Exact closed form: the deviation from the blow-up model is the
    // regular part, here +/- r in the first and third coordinates.
    for (size_t i = 0; i < radii.size(); ++i)
        CHECK(t.residuals[i] == doctest::Approx(radii[i]).epsilon(1e-9));
    for (size_t i = 1; i < radii.size(); ++i) {
        CHECK(t.residuals[i] < t.residuals[i - 1]);
        CHECK(t.ratios[i] < t.ratios[i - 1]);
    }
}
