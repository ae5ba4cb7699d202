#include <doctest.h>

#include <random>

#include "noetherres/field.hpp"

using namespace nres;

TEST_CASE("field_inverse examples") {
    for (std::uint32_t p : {0u, 2u, 5u, 101u}) {
        FieldSpec F(p);
        CHECK(field_inverse(FieldElement::one(F), F) == FieldElement::one(F));
    }
    // 2^{-1} over GF(5): exhaustive residue search as the oracle
    FieldSpec F5(5);
    FieldElement two = FieldElement::from_int(2, F5);
    std::uint64_t expected = 0;
    for (std::uint64_t r = 1; r < 5; ++r)
        if ((2 * r) % 5 == 1) expected = r;
    CHECK(expected == 3);
    CHECK(field_inverse(two, F5).residue() == expected);

    FieldSpec Q;
    FieldElement q = FieldElement::parse("3/4", Q);
    CHECK(field_inverse(q, Q) == FieldElement::parse("4/3", Q));

    CHECK_THROWS_AS(field_inverse(FieldElement::zero(Q), Q), ValidationError);
    CHECK_THROWS_AS(field_inverse(FieldElement::zero(F5), F5), ValidationError);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> pick(-30, 30);
    for (std::uint32_t p : {0u, 2u, 3u, 5u, 101u}) {
        FieldSpec F(p);
        for (int it = 0; it < 200; ++it) {
            FieldElement a = FieldElement::from_int(pick(rng), F);
            FieldElement b = FieldElement::from_int(pick(rng), F);
            FieldElement c = FieldElement::from_int(pick(rng), F);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == FieldElement::zero(F));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == FieldElement::one(F));
                CHECK(a / a == FieldElement::one(F));
            }
        }
    }
}

TEST_CASE("canonical forms") {
    FieldSpec Q;
    FieldElement x = FieldElement::from_fraction(6, -8, Q);
    CHECK(x == FieldElement::parse("-3/4", Q));
    CHECK(x.normalized() == x.normalized().normalized());
    CHECK(x.rational().get_den() == 4); // positive denominator, lowest terms
    CHECK(x.str() == "-3/4");

    FieldSpec F7(7);
    FieldElement y = FieldElement::from_int(-900, F7);
    CHECK(y.residue() < 7);
    CHECK(y.normalized() == y);
}

TEST_CASE("field spec validation") {
    CHECK_THROWS_AS(FieldSpec(4), ValidationError);
    CHECK_THROWS_AS(FieldSpec(1), ValidationError);
    CHECK_NOTHROW(FieldSpec(2));
    CHECK_NOTHROW(FieldSpec(2147483647)); // 2^31 - 1 is prime
    CHECK_THROWS_AS(FieldSpec(2147483648u), ValidationError);
}
