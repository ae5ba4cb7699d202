#include "fixtures.hpp"

#include "noetherres/poly_io.hpp"

namespace fixtures {

std::vector<Polynomial> eliminate_prefix(const std::vector<Polynomial>& gens, std::size_t nt,
                                         const std::vector<std::uint32_t>& wx,
                                         const FieldSpec& F) {
    const std::size_t nx = wx.size();
    const std::size_t nv = nt + nx;
    MonomialOrder elim = MonomialOrder::block(
        nt, MonomialOrder::weighted_degrevlex(WeightVector(std::vector<std::uint32_t>(nt, 1))),
        MonomialOrder::weighted_degrevlex(WeightVector(wx)));
    GroebnerBasis G = reduced_groebner_basis(gens, elim);
    MonomialOrder xord = MonomialOrder::weighted_degrevlex(WeightVector(wx));
    std::vector<Polynomial> out;
    for (const auto& g : G.elements) {
        bool pure = true;
        for (const auto& t : g.terms())
            if (!supported_in(t.m, nt, nv)) { pure = false; break; }
        if (!pure) continue;
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            Monomial m(nx);
            for (std::size_t i = 0; i < nx; ++i) m[i] = t.m[nt + i];
            ts.push_back({t.c, std::move(m)});
        }
        out.push_back(Polynomial::from_terms(std::move(ts), nx, F, xord));
    }
    return out;
}

namespace {

Polynomial binomial_xi_tmono(std::size_t nv, std::size_t xi, const std::vector<Exp>& texp,
                             const FieldSpec& F, const MonomialOrder& ord) {
    Monomial tm(nv);
    for (std::size_t i = 0; i < texp.size(); ++i) tm[i] = texp[i];
    return Polynomial::from_terms(
        {{FieldElement::one(F), Monomial::variable(nv, xi)}, {-FieldElement::one(F), tm}},
        nv, F, ord);
}

} // namespace

ShortResInput dim2_zero_divisor_ideal() {
    FieldSpec Q;
    std::vector<std::uint32_t> w5(5, 1);
    MonomialOrder ord = MonomialOrder::weighted_degrevlex(WeightVector(w5));
    VarNames names = VarNames::xs(5);

    // curve ideal: eliminate t1, t2 from x_i - t^{a_i}
    std::size_t nv = 2 + 5;
    MonomialOrder elim = MonomialOrder::block(
        2, MonomialOrder::weighted_degrevlex(WeightVector(std::vector<std::uint32_t>(2, 1))),
        MonomialOrder::weighted_degrevlex(WeightVector(w5)));
    std::vector<std::vector<Exp>> texp = {{1, 6}, {2, 5}, {6, 1}, {7, 0}, {0, 7}};
    std::vector<Polynomial> curve_gens;
    for (std::size_t c = 0; c < 5; ++c)
        curve_gens.push_back(binomial_xi_tmono(nv, 2 + c, texp[c], Q, elim));
    std::vector<Polynomial> IC = eliminate_prefix(curve_gens, 2, w5, Q);

    std::vector<Polynomial> L;
    for (const char* s :
         {"x1^2-x2*x3", "x2^3-x4*x5^2", "x1*x2", "x3^2", "x4^2-x5^2", "x2*x5", "x5^4"})
        L.push_back(parse_polynomial(s, names, Q, ord));

    // intersection: eliminate u from u*IC + (1-u)*L
    std::size_t nw = 1 + 5;
    MonomialOrder welim = MonomialOrder::block(
        1, MonomialOrder::weighted_degrevlex(WeightVector(std::vector<std::uint32_t>(1, 1))),
        MonomialOrder::weighted_degrevlex(WeightVector(w5)));
    auto lift = [&](const Polynomial& f, bool times_u) {
        std::vector<Term> ts;
        for (const auto& t : f.terms()) {
            Monomial m(nw);
            for (std::size_t i = 0; i < 5; ++i) m[1 + i] = t.m[i];
            if (times_u) {
                Monomial mu = m;
                mu[0] += 1;
                ts.push_back({t.c, mu});
            } else { // (1-u) * term
                ts.push_back({t.c, m});
                Monomial mu = m;
                mu[0] += 1;
                ts.push_back({-t.c, mu});
            }
        }
        return Polynomial::from_terms(std::move(ts), nw, Q, welim);
    };
    std::vector<Polynomial> J;
    for (const auto& f : IC) J.push_back(lift(f, true));
    for (const auto& f : L) J.push_back(lift(f, false));

    ShortResInput in;
    in.generators = eliminate_prefix(J, 1, w5, Q);
    in.weights = WeightVector(w5);
    in.dim = 2;
    in.field = Q;
    return in;
}

ToricPresentation surface_9_11() {
    return ToricPresentation::validate({{1, 5, 3, 5, 2, 0, 0},
                                        {3, 1, 5, 5, 0, 2, 0},
                                        {5, 5, 3, 1, 0, 0, 2}});
}

ToricPresentation surface_deg12() {
    return ToricPresentation::validate({{7, 1, 3, 12, 0, 0},
                                        {2, 8, 8, 0, 12, 0},
                                        {3, 3, 1, 0, 0, 12}});
}

ToricPresentation surface_deg4() {
    return ToricPresentation::validate({{1, 3, 0, 3, 0, 1, 4, 0, 0},
                                        {0, 0, 1, 1, 3, 3, 0, 4, 0},
                                        {3, 1, 3, 0, 1, 0, 0, 0, 4}});
}

ToricPresentation char_dependent_matrix() {
    return ToricPresentation::validate({{3, 3, 3, 3, 3, 1, 1, 1, 1, 1, 2, 0, 0, 0, 0, 0},
                                        {3, 3, 1, 1, 1, 3, 3, 3, 1, 1, 0, 2, 0, 0, 0, 0},
                                        {3, 1, 3, 1, 1, 3, 1, 1, 3, 3, 0, 0, 2, 0, 0, 0},
                                        {1, 1, 3, 3, 1, 1, 3, 3, 3, 1, 0, 0, 0, 2, 0, 0},
                                        {1, 1, 1, 3, 3, 3, 3, 1, 1, 3, 0, 0, 0, 0, 2, 0},
                                        {1, 3, 1, 1, 3, 1, 1, 3, 3, 3, 0, 0, 0, 0, 0, 2}});
}

ShortResInput perturbed_surface_ideal() {
    FieldSpec Q;
    std::vector<std::uint32_t> wx(7, 4);
    std::size_t nv = 3 + 7;
    MonomialOrder elim = MonomialOrder::block(
        3, MonomialOrder::weighted_degrevlex(WeightVector(std::vector<std::uint32_t>(3, 1))),
        MonomialOrder::weighted_degrevlex(WeightVector(wx)));
    auto one = FieldElement::one(Q);
    auto tmon = [&](Exp a, Exp b, Exp c) {
        Monomial m(nv);
        m[0] = a; m[1] = b; m[2] = c;
        return m;
    };
    std::vector<Polynomial> gens;
    // x1 maps to a binomial of quartics, the rest to quartic monomials
    gens.push_back(Polynomial::from_terms(
        {{one, Monomial::variable(nv, 3)}, {one, tmon(2, 2, 0)}, {-one, tmon(3, 0, 1)}},
        nv, Q, elim));
    std::vector<std::vector<Exp>> rest = {{3, 1, 0}, {0, 3, 1}, {0, 1, 3},
                                          {4, 0, 0}, {0, 4, 0}, {0, 0, 4}};
    for (std::size_t c = 0; c < rest.size(); ++c)
        gens.push_back(binomial_xi_tmono(nv, 3 + 1 + c, rest[c], Q, elim));

    ShortResInput in;
    in.generators = eliminate_prefix(gens, 3, wx, Q);
    in.weights = WeightVector(wx);
    in.dim = 3;
    in.field = Q;
    return in;
}

} // namespace fixtures
