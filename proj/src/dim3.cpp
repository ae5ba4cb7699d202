#include "noetherres/dim3.hpp"

#include <algorithm>
#include <set>

#include "noetherres/util.hpp"

namespace nres {

namespace {

// lexicographic x_n > x_{n-1} > x_{n-2} restricted to the A-variables
bool ladder_greater(const Monomial& a, const Monomial& b) {
    std::size_t n = a.nvars();
    for (std::size_t i = n; i-- > n - 3;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

void check_binomial_basis(const GroebnerBasis& G, std::size_t nvars, const char* code) {
    for (const auto& g : G.elements) {
        if (g.size() != 2)
            fail(code, "the reduced basis contains a non-binomial element");
        FieldSpec F(g.leading_coefficient().characteristic());
        if (!g.leading_coefficient().is_one() || g.terms()[1].c != -FieldElement::one(F))
            fail(code, "a basis binomial does not have coefficients 1, -1");
        if (g.leading_monomial()[nvars - 1] != 0)
            fail(code, "a leading term involves the last variable");
    }
}

Dim3Sets build_sets(const GroebnerBasis& G, const WeightVector& w) {
    const std::size_t n = w.size();
    if (n < 3) fail("NotDimension3", "need at least three variables");

    std::vector<Monomial> in_I;
    for (const auto& g : G.elements) in_I.push_back(g.leading_monomial());

    Dim3Sets sets;
    sets.B0 = standard_monomials_B0(in_I, n, 3);

    for (const auto& u : sets.B0) {
        bool in_J = false;
        for (const auto& g : in_I)
            if (divides(restrict_to(g, 0, n - 3), u)) { in_J = true; break; }
        if (!in_J) continue;

        std::vector<Monomial> gens = colon_into_A(in_I, u, 3);
        std::sort(gens.begin(), gens.end(), ladder_greater);
        for (const auto& M : gens) sets.B1prime.push_back(mul(u, M));

        if (gens.size() >= 2) {
            std::vector<Monomial> ladder;
            for (std::size_t i = 0; i + 1 < gens.size(); ++i)
                ladder.push_back(lcm(gens[i], gens[i + 1]));
            for (const auto& l : ladder) sets.B2prime.push_back(mul(u, l));
            sets.lcmLadders.emplace(u, std::move(ladder));
        }
        sets.perUGenerators.emplace(u, std::move(gens));
    }
    return sets;
}

Monomial nf_monomial(const Monomial& m, const GroebnerBasis& G, const FieldSpec& F) {
    Polynomial r = normal_form(Polynomial::monomial(FieldElement::one(F), m, F), G);
    if (r.size() != 1 || !r.leading_coefficient().is_one())
        fail("InternalError", "normal form of a monomial is not a monomial");
    return r.leading_monomial();
}

struct MembershipBases {
    const GroebnerBasis* plus_xnm2; // I + <x_{n-2}>
    const GroebnerBasis* plus_xn;   // I + <x_n>
};

void prune_with(const GroebnerBasis& G, const WeightVector& w, const FieldSpec& F,
                const MembershipBases& mb, Dim3Sets& sets) {
    const std::size_t n = w.size();

    auto member = [&](const Monomial& m, const GroebnerBasis& Q) {
        return normal_form(Polynomial::monomial(FieldElement::one(F), m, F), Q).is_zero();
    };

    sets.C.clear();
    sets.C1.clear();
    sets.C2.clear();
    sets.B1.clear();
    sets.B2.clear();

    std::vector<Monomial> r_of_C;
    for (const auto& alpha : sets.B1prime) {
        bool pure = alpha[n - 2] >= 2 && alpha[n - 3] == 0 && alpha[n - 1] == 0;
        if (!pure) continue;
        sets.C.push_back(alpha);
        Monomial r = nf_monomial(alpha, G, F);
        if (r[n - 1] == 0)
            fail("InternalError", "remainder of a C candidate is not a multiple of x_n");
        r_of_C.push_back(std::move(r));
    }

    // membership queries, independent over a shared read-only basis
    std::vector<Monomial> c_queries(sets.C.size()), r_queries;
    std::vector<std::size_t> r_query_at(sets.C.size(), SIZE_MAX);
    std::vector<bool> is_c1(sets.C.size(), false);
    for (std::size_t k = 0; k < sets.C.size(); ++k) {
        Monomial q = sets.C[k];
        q[n - 2] -= 1; // alpha / x_{n-1}
        c_queries[k] = std::move(q);
        if (r_of_C[k][n - 3] > 0) {
            is_c1[k] = true;
        } else {
            Monomial rq = r_of_C[k];
            rq[n - 1] -= 1; // r_alpha / x_n
            r_query_at[k] = r_queries.size();
            r_queries.push_back(std::move(rq));
        }
    }
    std::vector<char> c_in(sets.C.size(), 0), r_in(r_queries.size(), 0);
    parallel_for(sets.C.size(),
                 [&](std::size_t k) { c_in[k] = member(c_queries[k], *mb.plus_xnm2) ? 1 : 0; });
    parallel_for(r_queries.size(),
                 [&](std::size_t k) { r_in[k] = member(r_queries[k], *mb.plus_xnm2) ? 1 : 0; });

    std::vector<Monomial> kept;
    for (std::size_t k = 0; k < sets.C.size(); ++k) {
        const Monomial& alpha = sets.C[k];
        if (is_c1[k]) {
            sets.C1.push_back(alpha);
            if (!c_in[k]) kept.push_back(alpha);
        } else {
            sets.C2.push_back(alpha);
            if (!c_in[k] || !r_in[r_query_at[k]]) kept.push_back(alpha);
        }
    }
    // keep B1 in the B1' processing order
    std::set<Monomial> c_set(sets.C.begin(), sets.C.end());
    std::set<Monomial> kept_set(kept.begin(), kept.end());
    for (const auto& alpha : sets.B1prime)
        if (!c_set.count(alpha) || kept_set.count(alpha)) sets.B1.push_back(alpha);

    std::vector<Monomial> b2_queries;
    b2_queries.reserve(sets.B2prime.size());
    for (const auto& alpha : sets.B2prime) {
        if (alpha[n - 2] == 0) fail("InternalError", "B2' monomial without x_{n-1}");
        Monomial q = alpha;
        q[n - 2] -= 1;
        b2_queries.push_back(std::move(q));
    }
    std::vector<char> b2_in(sets.B2prime.size(), 0);
    parallel_for(sets.B2prime.size(),
                 [&](std::size_t k) { b2_in[k] = member(b2_queries[k], *mb.plus_xn) ? 1 : 0; });
    for (std::size_t k = 0; k < sets.B2prime.size(); ++k)
        if (b2_in[k]) sets.B2.push_back(sets.B2prime[k]);

    if (sets.B1prime.size() - sets.B1.size() != sets.B2prime.size() - sets.B2.size())
        fail("InternalError", "pruning removed unbalanced counts from B1' and B2'");
    sets.pruned = true;
}

} // namespace

Dim3Sets schreyer_sets_dim3(ToricContext& ctx) {
    if (ctx.presentation().dim() != 3)
        fail("NotDimension3", "the presentation has dimension " +
                                  std::to_string(ctx.presentation().dim()));
    const GroebnerBasis& G = ctx.ideal_basis();
    check_binomial_basis(G, ctx.presentation().nvars(), "NotPrimeBinomial");
    return build_sets(G, ctx.presentation().weights());
}

Dim3Sets schreyer_sets_dim3_ideal(const GroebnerBasis& G, const WeightVector& w) {
    check_binomial_basis(G, w.size(), "NotPrimeBinomial");
    return build_sets(G, w);
}

void prune_dim3(ToricContext& ctx, Dim3Sets& sets) {
    const std::size_t n = ctx.presentation().nvars();
    const GroebnerBasis& G = ctx.ideal_basis();
    check_binomial_basis(G, n, "NotToric");
    // materialize both membership bases before the parallel queries
    MembershipBases mb{&ctx.ideal_plus_basis(Monomial::variable(n, n - 3)),
                       &ctx.ideal_plus_basis(Monomial::variable(n, n - 1))};
    prune_with(G, ctx.presentation().weights(), ctx.field(), mb, sets);
}

Dim3Sets schreyer_and_prune_ideal(const GroebnerBasis& G, const WeightVector& w,
                                  const FieldSpec& F) {
    check_binomial_basis(G, w.size(), "NotToric");
    Dim3Sets sets = build_sets(G, w);
    prune_dim3_ideal(G, w, F, sets);
    return sets;
}

void prune_dim3_ideal(const GroebnerBasis& G, const WeightVector& w, const FieldSpec& F,
                      Dim3Sets& sets) {
    const std::size_t n = w.size();
    check_binomial_basis(G, n, "NotToric");
    std::vector<Polynomial> with_xnm2 = G.elements, with_xn = G.elements;
    with_xnm2.push_back(Polynomial::monomial(FieldElement::one(F), Monomial::variable(n, n - 3), F));
    with_xn.push_back(Polynomial::monomial(FieldElement::one(F), Monomial::variable(n, n - 1), F));
    GroebnerBasis g1 = reduced_groebner_basis(std::move(with_xnm2), G.order);
    GroebnerBasis g2 = reduced_groebner_basis(std::move(with_xn), G.order);
    MembershipBases mb{&g1, &g2};
    prune_with(G, w, F, mb, sets);
}

std::string degree_class_name(DegreeClass c) {
    switch (c) {
    case DegreeClass::Apery: return "APERY";
    case DegreeClass::E31: return "E31";
    case DegreeClass::E20: return "E20";
    case DegreeClass::E30: return "E30";
    case DegreeClass::E33: return "E33";
    case DegreeClass::Simplex: return "SIMPLEX";
    case DegreeClass::Other: return "OTHER";
    }
    return "?";
}

DegreeClass classify_degree(const Monomial& beta, ToricContext& ctx) {
    const std::size_t n = ctx.presentation().nvars();
    if (ctx.presentation().dim() != 3) fail("NotDimension3", "classification needs d = 3");

    auto query = [&](std::initializer_list<std::size_t> rays) {
        Monomial gamma(n);
        for (std::size_t i : rays) gamma[n - 3 + i] = 1;
        return semigroup_contains(beta, gamma, ctx);
    };
    bool s1 = query({0}), s2 = query({1}), s3 = query({2});
    bool p12 = query({0, 1}), p13 = query({0, 2}), p23 = query({1, 2});
    bool triple = query({0, 1, 2});

    if (triple) return DegreeClass::Simplex;
    int a = int(s1) + int(s2) + int(s3);
    int b = int(p12) + int(p13) + int(p23);
    if (a == 0 && b == 0) return DegreeClass::Apery;
    if (a == 3 && b == 1) return DegreeClass::E31;
    if (a == 2 && b == 0) return DegreeClass::E20;
    if (a == 3 && b == 0) return DegreeClass::E30;
    if (a == 3 && b == 3) return DegreeClass::E33;
    return DegreeClass::Other;
}

ExceptionalSets apery_and_exceptional_sets(ToricContext& ctx) {
    Dim3Sets sets = schreyer_sets_dim3(ctx);
    prune_dim3(ctx, sets);
    return apery_and_exceptional_sets(ctx, sets);
}

ExceptionalSets apery_and_exceptional_sets(ToricContext& ctx, const Dim3Sets& sets) {
    if (!sets.pruned) fail("InternalError", "exceptional sets need pruned data");
    auto deg3 = [&](const Monomial& m) {
        auto v = multidegree(m, ctx.presentation());
        return Degree3{v[0], v[1], v[2]};
    };

    ExceptionalSets E;
    for (const auto& u : sets.B0) E.AP.push_back(deg3(u));

    std::map<Degree3, std::pair<std::size_t, Monomial>> b1deg; // degree -> (count, witness)
    for (const auto& m : sets.B1) {
        auto [it, ins] = b1deg.emplace(deg3(m), std::make_pair(std::size_t{1}, m));
        if (!ins) ++it->second.first;
    }
    for (const auto& [s, cw] : b1deg) {
        DegreeClass cls = classify_degree(cw.second, ctx);
        std::size_t expect = cls == DegreeClass::E30 ? 2 : 1;
        if (cw.first != expect ||
            (cls != DegreeClass::E31 && cls != DegreeClass::E20 && cls != DegreeClass::E30))
            fail("InternalError",
                 "a B1 degree classifies as " + degree_class_name(cls) + " with multiplicity " +
                     std::to_string(cw.first));
        if (cls == DegreeClass::E31) E.E31.push_back(s);
        else if (cls == DegreeClass::E20) E.E20.push_back(s);
        else E.E30.push_back(s);
    }
    for (const auto& m : sets.B2) E.E33.push_back(deg3(m));

    auto finish = [](std::vector<Degree3>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    finish(E.AP);
    finish(E.E31);
    finish(E.E20);
    finish(E.E30);
    std::size_t before = E.E33.size();
    finish(E.E33);
    if (E.E33.size() != before)
        fail("InternalError", "B2 monomials with repeated multidegrees");
    return E;
}

MultiPoly3 multigraded_hilbert_numerator(const ExceptionalSets& E) {
    MultiPoly3 h;
    for (const auto& s : E.AP) h.add(s, 1);
    for (const auto& s : E.E31) h.add(s, -1);
    for (const auto& s : E.E20) h.add(s, -1);
    for (const auto& s : E.E30) h.add(s, -2);
    for (const auto& s : E.E33) h.add(s, 1);
    return h;
}

std::int64_t surface_regularity(const ExceptionalSets& E, std::uint32_t D) {
    if (D == 0) fail("NotEquigenerated", "no common generator degree");
    auto m_of = [&](const std::vector<Degree3>& F) -> std::int64_t {
        std::int64_t best = -1;
        for (const auto& s : F) {
            std::uint64_t total = s[0] + s[1] + s[2];
            if (total % D != 0)
                fail("NotEquigenerated", "a degree does not lie on a level plane");
            best = std::max(best, static_cast<std::int64_t>(total / D));
        }
        return best;
    };
    std::int64_t reg = m_of(E.AP); // AP contains 0, never empty
    if (!E.E31.empty()) reg = std::max(reg, m_of(E.E31) - 1);
    if (!E.E20.empty()) reg = std::max(reg, m_of(E.E20) - 1);
    if (!E.E30.empty()) reg = std::max(reg, m_of(E.E30) - 1);
    if (!E.E33.empty()) reg = std::max(reg, m_of(E.E33) - 2);
    return reg;
}

std::uint64_t sumset_size(const ToricPresentation& P, std::uint64_t s) {
    if (!P.homogeneous_degree())
        fail("NotEquigenerated", "the generators do not share a common degree");
    if (s == 0) return 1;
    std::set<std::vector<std::uint64_t>> cur{std::vector<std::uint64_t>(P.dim(), 0)};
    for (std::uint64_t k = 0; k < s; ++k) {
        std::set<std::vector<std::uint64_t>> next;
        for (const auto& p : cur) {
            for (std::size_t c = 0; c < P.nvars(); ++c) {
                std::vector<std::uint64_t> q = p;
                for (std::size_t r = 0; r < P.dim(); ++r) q[r] += P.matrix()[r][c];
                next.insert(std::move(q));
            }
        }
        cur = std::move(next);
    }
    return cur.size();
}

} // namespace nres
