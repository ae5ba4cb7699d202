#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "noetherres/poly_io.hpp"

using namespace nres;

TEST_CASE("presentation validation") {
    ToricPresentation P = fixtures::surface_9_11();
    CHECK(P.weights().values() == std::vector<std::uint32_t>{9, 11, 11, 11, 2, 2, 2});
    CHECK(!P.homogeneous_degree());
    CHECK(P.extremal_scales() == std::vector<std::uint32_t>{2, 2, 2});

    ToricPresentation P4 = fixtures::char_dependent_matrix();
    std::vector<std::uint32_t> w(16, 2);
    for (std::size_t i = 0; i < 10; ++i) w[i] = 12;
    CHECK(P4.weights().values() == w);
    CHECK(!P4.homogeneous_degree());

    ToricPresentation diag = ToricPresentation::validate({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    CHECK(diag.homogeneous_degree() == 2);

    CHECK(fixtures::surface_deg12().homogeneous_degree() == 12);

    // last columns must be scaled canonical basis vectors, in order
    CHECK_THROWS_WITH_AS(
        (void)ToricPresentation::validate({{1, 1, 0}, {0, 1, 1}}),
        doctest::Contains("NotSimplicialNormalForm"), ValidationError);
    CHECK_THROWS_WITH_AS(
        (void)ToricPresentation::validate({{1, 0, 1, 0}, {0, 0, 0, 1}}),
        doctest::Contains("ZeroColumn"), ValidationError);
}

TEST_CASE("toric ideals by elimination") {
    FieldSpec Q;
    // square diagonal matrix: zero ideal
    CHECK(toric_ideal(ToricPresentation::validate({{2, 0}, {0, 3}}), Q).empty());

    // hand elimination of t1, t2 from x1 - t1, x2 - t1 t2, x3 - t2 gives
    // the single binomial x1 x3 - x2, stored monic on its leading term x2
    auto gens = toric_ideal_from_matrix({{1, 1, 0}, {0, 1, 1}}, Q);
    REQUIRE(gens.size() == 1);
    VarNames names = VarNames::xs(3);
    auto ord = MonomialOrder::weighted_degrevlex(WeightVector({1, 2, 1}));
    CHECK(gens[0] == parse_polynomial("x2 - x1*x3", names, Q, ord));
    CHECK(neg(gens[0]) == parse_polynomial("x1*x3 - x2", names, Q, ord));
}

TEST_CASE("toric generators are S-homogeneous binomials with unit coefficients") {
    ToricPresentation P = fixtures::surface_9_11();
    FieldSpec Q;
    auto gens = toric_ideal(P, Q);
    CHECK(!gens.empty());
    for (const auto& g : gens) {
        REQUIRE(g.size() == 2);
        CHECK(g.terms()[0].c.is_one());
        CHECK(g.terms()[1].c == -FieldElement::one(Q));
        CHECK(multidegree(g.terms()[0].m, P) == multidegree(g.terms()[1].m, P));
    }
}

TEST_CASE("reduced toric bases are characteristic independent") {
    ToricPresentation P = fixtures::surface_9_11();
    auto overQ = toric_ideal(P, FieldSpec());
    auto over2 = toric_ideal(P, FieldSpec(2));
    REQUIRE(overQ.size() == over2.size());
    for (std::size_t i = 0; i < overQ.size(); ++i) {
        REQUIRE(overQ[i].size() == over2[i].size());
        for (std::size_t k = 0; k < overQ[i].size(); ++k)
            CHECK(overQ[i].terms()[k].m == over2[i].terms()[k].m);
    }
}

TEST_CASE("multidegrees") {
    ToricPresentation P = fixtures::surface_9_11();
    CHECK(multidegree(Monomial(7), P) == std::vector<std::uint64_t>{0, 0, 0});
    Monomial x3x5(7);
    x3x5[2] = 1;
    x3x5[4] = 1;
    CHECK(multidegree(x3x5, P) == std::vector<std::uint64_t>{5, 5, 3});
    for (std::size_t c = 0; c < 7; ++c) {
        auto col = P.column(c);
        auto deg = multidegree(Monomial::variable(7, c), P);
        for (std::size_t r = 0; r < 3; ++r) CHECK(deg[r] == col[r]);
    }
    CHECK_THROWS_AS(multidegree(Monomial(4), P), ValidationError);
}

TEST_CASE("semigroup membership against the factorization oracle") {
    ToricPresentation P = fixtures::surface_9_11();
    FieldSpec Q;
    ToricContext ctx(P, Q);

    // gamma = 0 and beta = gamma are always inside
    Monomial b(7);
    b[0] = 1; b[4] = 1; b[5] = 1; // x1 x5 x6
    CHECK(semigroup_contains(b, Monomial(7), ctx));
    CHECK(semigroup_contains(b, b, ctx));

    // the specific query b = deg(x1 x5 x6), c = deg(x4 x7)
    Monomial c(7);
    c[3] = 1; c[6] = 1;
    auto db = multidegree(b, P);
    auto dc = multidegree(c, P);
    std::vector<std::int64_t> diff(3);
    for (std::size_t r = 0; r < 3; ++r)
        diff[r] = static_cast<std::int64_t>(db[r]) - static_cast<std::int64_t>(dc[r]);
    CHECK(semigroup_contains(b, c, ctx) == oracles::semigroup_member(P.matrix(), diff));

    // randomized agreement with the brute-force oracle
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<Exp> e(0, 2);
    for (int it = 0; it < 60; ++it) {
        Monomial beta(7), gamma(7);
        for (std::size_t i = 0; i < 7; ++i) { beta[i] = e(rng); gamma[i] = e(rng); }
        auto dbeta = multidegree(beta, P);
        auto dgamma = multidegree(gamma, P);
        std::vector<std::int64_t> t(3);
        for (std::size_t r = 0; r < 3; ++r)
            t[r] = static_cast<std::int64_t>(dbeta[r]) - static_cast<std::int64_t>(dgamma[r]);
        CHECK(semigroup_contains(beta, gamma, ctx) == oracles::semigroup_member(P.matrix(), t));
    }
}
