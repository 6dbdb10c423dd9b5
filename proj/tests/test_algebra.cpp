#include <doctest.h>

#include <random>

#include "tml/algebra.hpp"

using namespace tml;

namespace {

using BQ = Bicomplex<Rational>;

Rational rand_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    return rat(num(rng), den(rng));
}

BQ rand_bc(std::mt19937& rng) {
    return {rand_rat(rng), rand_rat(rng), rand_rat(rng), rand_rat(rng)};
}

} // namespace

TEST_CASE("idempotent basis identities") {
    BQ e = bc_e(), ed = bc_e_dagger();
    CHECK(e + ed == bc_one<Rational>());
    CHECK(e - ed == bc_k<Rational>());
    CHECK((e * ed).is_zero());
    CHECK(e * e == e);
    CHECK(ed * ed == ed);
}

TEST_CASE("to_idempotent on basis elements") {
    auto p = to_idempotent(bc_k<Rational>());
    CHECK(p.beta1 == gq(1));
    CHECK(p.beta2 == gq(-1));

    auto pe = to_idempotent(bc_e());
    CHECK(pe.beta1 == gq(1));
    CHECK(pe.beta2 == gq(0));

    // 1 + j -> (1 - i, 1 + i)
    auto pj = to_idempotent(bc_one<Rational>() + bc_j<Rational>());
    CHECK(pj.beta1 == gq(1, -1));
    CHECK(pj.beta2 == gq(1, 1));
}

TEST_CASE("from_idempotent on basis pairs") {
    CHECK(from_idempotent<Rational>({gq(1), gq(-1)}) == bc_k<Rational>());
    CHECK(from_idempotent<Rational>({gq(1), gq(1)}) == bc_one<Rational>());
    CHECK(from_idempotent<Rational>({gq(2), gq(0)}) == bc_one<Rational>() + bc_k<Rational>());
}

TEST_CASE("star basics") {
    CHECK(star(bc_i<Rational>()) == -bc_i<Rational>());
    CHECK(star(bc_k<Rational>()) == bc_k<Rational>());
    // z* = conj(z1) - j conj(z2): j has z1 = 0, z2 = 1, so star(j) = -j.
    CHECK(star(bc_j<Rational>()) == -bc_j<Rational>());
}

TEST_CASE("star conjugates idempotent components") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        BQ z = rand_bc(rng);
        auto p = to_idempotent(star(z));
        auto q = to_idempotent(z);
        CHECK(p.beta1 == q.beta1.conj());
        CHECK(p.beta2 == q.beta2.conj());
    }
}

TEST_CASE("zero divisor predicate") {
    CHECK(is_zero_divisor(bc_e()));
    CHECK_FALSE(is_zero_divisor(BQ{}));
    CHECK(is_zero_divisor(bc_one<Rational>() + bc_k<Rational>()));
    CHECK_FALSE(is_zero_divisor(bc_one<Rational>()));
}

TEST_CASE("split_restrict") {
    BQ z{rat(2), rat(0), rat(0), rat(3)};
    auto s = split_restrict(z);
    CHECK(s.x == rat(2));
    CHECK(s.y == rat(3));

    auto se = split_restrict(bc_e());
    CHECK(se.x == rat(1, 2));
    CHECK(se.y == rat(1, 2));

    CHECK_THROWS_AS(split_restrict(bc_one<Rational>() + bc_i<Rational>()), NotInSplitPlane);
}

TEST_CASE("split norm values") {
    CHECK(split_norm_sq(SplitComplex<Rational>{rat(2), rat(1)}) == rat(3));
    CHECK(split_norm_sq(SplitComplex<Rational>{rat(1), rat(1)}) == rat(0));
    CHECK(split_norm_sq(SplitComplex<Rational>{rat(1), rat(2)}) == rat(-3));
}

TEST_CASE("ring axioms and isomorphism on random triples") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        BQ a = rand_bc(rng), b = rand_bc(rng), c = rand_bc(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(from_idempotent(to_idempotent(a)) == a);

        auto pa = to_idempotent(a), pb = to_idempotent(b);
        auto prod = to_idempotent(a * b);
        CHECK(prod.beta1 == pa.beta1 * pb.beta1);
        CHECK(prod.beta2 == pa.beta2 * pb.beta2);
        auto sum = to_idempotent(a + b);
        CHECK(sum.beta1 == pa.beta1 + pb.beta1);

        CHECK(star(star(a)) == a);
        CHECK(star(a * b) == star(a) * star(b));

        bool zd = is_zero_divisor(a);
        bool one_zero = (pa.beta1.is_zero()) != (pa.beta2.is_zero());
        CHECK(zd == (one_zero && !a.is_zero()));
    }
}

TEST_CASE("split norm multiplicativity") {
    std::mt19937 rng(13);
    for (int t = 0; t < 200; ++t) {
        SplitComplex<Rational> a{rand_rat(rng), rand_rat(rng)};
        SplitComplex<Rational> b{rand_rat(rng), rand_rat(rng)};
        CHECK(split_norm_sq(a * b) == split_norm_sq(a) * split_norm_sq(b));
    }
}
