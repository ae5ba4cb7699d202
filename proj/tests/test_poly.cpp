#include <doctest.h>

#include <algorithm>
#include <random>

#include "noetherres/poly_io.hpp"

using namespace nres;

namespace {

Monomial mono(std::vector<Exp> e) { return Monomial(std::move(e)); }

MonomialOrder std_degrevlex(std::size_t n) {
    return MonomialOrder::weighted_degrevlex(WeightVector(std::vector<std::uint32_t>(n, 1)));
}

} // namespace

TEST_CASE("compare_monomials") {
    auto ord2 = std_degrevlex(2);
    CHECK(compare_monomials(mono({1, 1}), mono({1, 1}), ord2) == Cmp::Equal);
    // equal degrees, difference (1,-1): last nonzero entry negative
    CHECK(compare_monomials(mono({2, 0}), mono({1, 1}), ord2) == Cmp::Greater);

    // weights (6,...,6,1,...,1) on 16 variables: x1 vs x11^5 is 6 > 5
    std::vector<std::uint32_t> w(16, 1);
    for (std::size_t i = 0; i < 10; ++i) w[i] = 6;
    auto ord16 = MonomialOrder::weighted_degrevlex(WeightVector(w));
    Monomial x1 = Monomial::variable(16, 0);
    Monomial x11_5 = Monomial::variable(16, 10, 5);
    CHECK(compare_monomials(x1, x11_5, ord16) == Cmp::Greater);

    CHECK_THROWS_AS(compare_monomials(mono({1, 0}), mono({1, 0, 0}), ord2), ValidationError);
}

TEST_CASE("compare_monomials is a total order on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Exp> e(0, 6);
    auto ord = MonomialOrder::weighted_degrevlex(WeightVector({2, 1, 3, 1}));
    std::vector<Monomial> ms;
    for (int i = 0; i < 60; ++i) ms.push_back(mono({e(rng), e(rng), e(rng), e(rng)}));
    for (const auto& a : ms)
        for (const auto& b : ms) {
            Cmp ab = ord.compare(a, b), ba = ord.compare(b, a);
            CHECK(ab == flip(ba));
            if (ab == Cmp::Equal) CHECK(a == b);
        }
    // transitivity via sort consistency
    std::vector<Monomial> sorted = ms;
    std::sort(sorted.begin(), sorted.end(), [&](const Monomial& a, const Monomial& b) {
        return ord.compare(a, b) == Cmp::Less;
    });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        CHECK(ord.compare(sorted[i + 1], sorted[i]) != Cmp::Less);
    // multiplicative: a > b implies a*m > b*m
    for (int i = 0; i < 40; ++i) {
        const Monomial &a = ms[i], &b = ms[i + 10];
        Monomial m = mono({e(rng), e(rng), e(rng), e(rng)});
        CHECK(ord.compare(a, b) == ord.compare(mul(a, m), mul(b, m)));
        CHECK(ord.compare_product(a, m, b, m) == ord.compare(a, b));
    }
}

TEST_CASE("omega_degree") {
    WeightVector w({1, 1, 1, 1, 1});
    CHECK(omega_degree(Monomial(5), w) == 0);
    CHECK(omega_degree(Monomial::variable(5, 2, 4), w) == 4); // x3^4

    WeightVector w9({9, 11, 11, 11, 2, 2, 2});
    Monomial x3x5(7);
    x3x5[2] = 1;
    x3x5[4] = 1;
    CHECK(omega_degree(x3x5, w9) == 13);

    CHECK_THROWS_AS(omega_degree(Monomial(3), w), ValidationError);
}

TEST_CASE("division basics") {
    FieldSpec Q;
    auto ord = std_degrevlex(3);
    VarNames names = VarNames::xs(3);
    Polynomial d1 = parse_polynomial("x1*x3 - x2", names, Q, ord);
    auto r = divide(d1, {d1}, ord);
    CHECK(r.remainder.is_zero());
    CHECK(r.quotients[0] == parse_polynomial("1", names, Q, ord));

    // a monomial below every leading term stays put
    Polynomial m = parse_polynomial("x2^2", names, Q, ord);
    auto r2 = divide(m, {d1}, ord);
    CHECK(r2.remainder == m);
    CHECK(r2.quotients[0].is_zero());
}

TEST_CASE("division reproduces the input and preserves homogeneity") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<Exp> e(0, 4);
    std::uniform_int_distribution<long> c(-5, 5);
    FieldSpec F5(5);
    auto ord = std_degrevlex(3);
    auto rand_poly = [&](int terms) {
        std::vector<Term> ts;
        for (int i = 0; i < terms; ++i)
            ts.push_back({FieldElement::from_int(c(rng), F5), mono({e(rng), e(rng), e(rng)})});
        return Polynomial::from_terms(std::move(ts), 3, F5, ord);
    };
    for (int it = 0; it < 100; ++it) {
        Polynomial f = rand_poly(5);
        std::vector<Polynomial> ds;
        for (int k = 0; k < 3; ++k) {
            Polynomial d = rand_poly(3);
            if (!d.is_zero()) ds.push_back(d);
        }
        if (ds.empty()) continue;
        auto res = divide(f, ds, ord);
        Polynomial sum = res.remainder;
        for (std::size_t k = 0; k < ds.size(); ++k)
            sum = add(sum, mul(res.quotients[k], ds[k], ord), ord);
        CHECK(sum == f);
        if (!f.is_zero())
            for (std::size_t k = 0; k < ds.size(); ++k)
                if (!res.quotients[k].is_zero())
                    CHECK(ord.compare(mul(res.quotients[k].leading_monomial(),
                                          ds[k].leading_monomial()),
                                      f.leading_monomial()) != Cmp::Greater);
        // no remainder monomial is divisible by a leading monomial
        for (const auto& t : res.remainder.terms())
            for (const auto& d : ds) CHECK(!divides(d.leading_monomial(), t.m));
    }

    // homogeneous inputs give homogeneous quotients and remainders
    WeightVector w({1, 1, 1});
    VarNames names = VarNames::xs(3);
    FieldSpec Q;
    Polynomial f = parse_polynomial("x1^2*x2^2 + x2*x3^3", names, Q, ord);
    Polynomial g = parse_polynomial("x1*x2 - x3^2", names, Q, ord);
    auto res = divide(f, {g}, ord);
    CHECK(res.remainder.is_homogeneous(w));
    CHECK(res.quotients[0].is_homogeneous(w));
    REQUIRE(!res.quotients[0].is_zero());
    auto df = f.homogeneous_degree(w);
    auto dq = res.quotients[0].homogeneous_degree(w);
    auto dg = g.homogeneous_degree(w);
    REQUIRE((df && dq && dg));
    CHECK(*dq + *dg == *df);
}

TEST_CASE("polynomial text syntax") {
    FieldSpec Q;
    auto ord = std_degrevlex(4);
    VarNames names = VarNames::xs(4);
    Polynomial f = parse_polynomial("2x1^2x2 - 3/4*x3*x4 + 1", names, Q, ord);
    CHECK(f.size() == 3);
    CHECK(polynomial_str(f, names) == "2*x1^2*x2 - 3/4*x3*x4 + 1");
    // round-trip
    CHECK(parse_polynomial(polynomial_str(f, names), names, Q, ord) == f);
    CHECK(parse_polynomial("0", names, Q, ord).is_zero());
    CHECK_THROWS_AS(parse_polynomial("x9", names, Q, ord), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 + + x2", names, Q, ord), ParseError);
    // coefficient merging across reordered input
    Polynomial g = parse_polynomial("x1*x2 + x2*x1 - 2*x1*x2", names, Q, ord);
    CHECK(g.is_zero());
}

TEST_CASE("resorting changes only the term order") {
    FieldSpec Q;
    VarNames names = VarNames::xs(3);
    auto grevlex = std_degrevlex(3);
    auto lex = MonomialOrder::lex({0, 1, 2});
    Polynomial f = parse_polynomial("x3^3 + x1*x2", names, Q, grevlex);
    Polynomial g = f.resorted(lex);
    CHECK(g.leading_monomial() == mono({1, 1, 0}));
    CHECK(f.leading_monomial() == mono({0, 0, 3}));
    CHECK(g.resorted(grevlex) == f);
}
