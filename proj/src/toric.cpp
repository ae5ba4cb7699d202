#include "noetherres/toric.hpp"

namespace nres {

ToricPresentation ToricPresentation::validate(
    const std::vector<std::vector<std::uint32_t>>& matrix) {
    if (matrix.empty() || matrix[0].empty())
        fail("ZeroColumn", "empty generator matrix");
    ToricPresentation P;
    P.m_ = matrix;
    P.d_ = matrix.size();
    P.n_ = matrix[0].size();
    for (const auto& row : matrix)
        if (row.size() != P.n_)
            fail("LengthMismatch", "ragged generator matrix");
    if (P.n_ < P.d_)
        fail("NotSimplicialNormalForm", "fewer columns than rows");

    std::vector<std::uint32_t> w(P.n_, 0);
    for (std::size_t c = 0; c < P.n_; ++c) {
        std::uint64_t s = 0;
        for (std::size_t r = 0; r < P.d_; ++r) s += matrix[r][c];
        if (s == 0) fail("ZeroColumn", "column " + std::to_string(c + 1) + " is zero");
        w[c] = static_cast<std::uint32_t>(s);
    }
    // last d columns must be scaled canonical basis vectors, in order
    P.scales_.assign(P.d_, 0);
    for (std::size_t i = 0; i < P.d_; ++i) {
        std::size_t c = P.n_ - P.d_ + i;
        for (std::size_t r = 0; r < P.d_; ++r) {
            if (r == i) {
                if (matrix[r][c] == 0)
                    fail("NotSimplicialNormalForm",
                         "column " + std::to_string(c + 1) + " is not a positive multiple of e_" +
                             std::to_string(i + 1));
                P.scales_[i] = matrix[r][c];
            } else if (matrix[r][c] != 0) {
                fail("NotSimplicialNormalForm",
                     "column " + std::to_string(c + 1) + " is not a multiple of e_" +
                         std::to_string(i + 1));
            }
        }
    }
    P.weights_ = WeightVector(w);
    bool equi = true;
    for (std::size_t c = 1; c < P.n_; ++c)
        if (w[c] != w[0]) { equi = false; break; }
    if (equi) P.D_ = w[0];
    return P;
}

std::vector<std::uint32_t> ToricPresentation::column(std::size_t c) const {
    std::vector<std::uint32_t> col(d_);
    for (std::size_t r = 0; r < d_; ++r) col[r] = m_[r][c];
    return col;
}

std::vector<Polynomial> toric_ideal_from_matrix(
    const std::vector<std::vector<std::uint32_t>>& matrix, const FieldSpec& F) {
    const std::size_t d = matrix.size();
    const std::size_t n = matrix.empty() ? 0 : matrix[0].size();
    const std::size_t nv = d + n; // ring k[t_1..t_d, x_1..x_n]

    std::vector<std::uint32_t> wx(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
        std::uint64_t s = 0;
        for (std::size_t r = 0; r < d; ++r) s += matrix[r][c];
        wx[c] = static_cast<std::uint32_t>(s == 0 ? 1 : s);
    }
    MonomialOrder elim = MonomialOrder::block(
        d, MonomialOrder::weighted_degrevlex(WeightVector(std::vector<std::uint32_t>(d, 1))),
        MonomialOrder::weighted_degrevlex(WeightVector(wx)));

    std::vector<Polynomial> gens;
    gens.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        Monomial tmon(nv);
        for (std::size_t r = 0; r < d; ++r) tmon[r] = matrix[r][c];
        std::vector<Term> ts;
        ts.push_back({FieldElement::one(F), Monomial::variable(nv, d + c)});
        ts.push_back({-FieldElement::one(F), tmon});
        gens.push_back(Polynomial::from_terms(std::move(ts), nv, F, elim));
    }
    GroebnerBasis G = reduced_groebner_basis(std::move(gens), elim);

    // restrict to k[x]: drop elements mentioning a t variable, then shrink
    MonomialOrder xord = MonomialOrder::weighted_degrevlex(WeightVector(wx));
    std::vector<Polynomial> out;
    for (const auto& g : G.elements) {
        bool pure = true;
        for (const auto& t : g.terms())
            if (!supported_in(t.m, d, nv)) { pure = false; break; }
        if (!pure) continue;
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            Monomial m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = t.m[d + i];
            ts.push_back({t.c, std::move(m)});
        }
        out.push_back(Polynomial::from_terms(std::move(ts), n, F, xord));
    }
    return out;
}

std::vector<Polynomial> toric_ideal(const ToricPresentation& P, const FieldSpec& F) {
    return toric_ideal_from_matrix(P.matrix(), F);
}

std::vector<std::uint64_t> multidegree(const Monomial& m, const ToricPresentation& P) {
    if (m.nvars() != P.nvars())
        fail("LengthMismatch", "exponent vector does not match the presentation");
    std::vector<std::uint64_t> deg(P.dim(), 0);
    for (std::size_t r = 0; r < P.dim(); ++r)
        for (std::size_t c = 0; c < P.nvars(); ++c)
            deg[r] += static_cast<std::uint64_t>(P.matrix()[r][c]) * m[c];
    return deg;
}

ToricContext::ToricContext(ToricPresentation P, FieldSpec F)
    : P_(std::move(P)), F_(F),
      ord_(MonomialOrder::weighted_degrevlex(P_.weights())) {}

const GroebnerBasis& ToricContext::ideal_basis() {
    if (!gb_) {
        // the elimination output is already the reduced >_omega basis
        GroebnerBasis G{toric_ideal(P_, F_), ord_, true};
        gb_ = std::move(G);
    }
    return *gb_;
}

const GroebnerBasis& ToricContext::ideal_plus_basis(const Monomial& gamma) {
    auto it = gb_plus_.find(gamma);
    if (it != gb_plus_.end()) return it->second;
    std::vector<Polynomial> gens = ideal_basis().elements;
    gens.push_back(Polynomial::monomial(FieldElement::one(F_), gamma, F_));
    GroebnerBasis G = reduced_groebner_basis(std::move(gens), ord_);
    return gb_plus_.emplace(gamma, std::move(G)).first->second;
}

bool semigroup_contains(const Monomial& beta, const Monomial& gamma, ToricContext& ctx) {
    if (gamma.is_one()) return true;
    const GroebnerBasis& G = ctx.ideal_plus_basis(gamma);
    Polynomial xb = Polynomial::monomial(FieldElement::one(ctx.field()), beta, ctx.field());
    return normal_form(xb, G).is_zero();
}

} // namespace nres
