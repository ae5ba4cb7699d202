#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noetherres/field.hpp"
#include "noetherres/order.hpp"

namespace nres {

struct Term {
    FieldElement c;
    Monomial m;
};

/// Sparse polynomial: terms strictly descending in the active order, no
/// zero coefficients. The active order is whatever the producing call used;
/// re-sorting on an order change is explicit via resorted().
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::size_t nvars, FieldSpec field) : nvars_(nvars), field_(field) {}

    static Polynomial zero(std::size_t nvars, FieldSpec field) { return {nvars, field}; }
    static Polynomial monomial(FieldElement c, Monomial m, FieldSpec field);
    static Polynomial from_terms(std::vector<Term> terms, std::size_t nvars, FieldSpec field,
                                 const MonomialOrder& ord); // merges and sorts

    std::size_t nvars() const { return nvars_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Initial term including the coefficient.
    const Term& leading_term() const;
    /// Monic leading monomial.
    const Monomial& leading_monomial() const;
    const FieldElement& leading_coefficient() const;

    bool is_homogeneous(const WeightVector& w) const;
    std::optional<std::uint64_t> homogeneous_degree(const WeightVector& w) const;

    Polynomial resorted(const MonomialOrder& ord) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    friend Polynomial add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
    friend Polynomial sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
    friend Polynomial neg(const Polynomial& f);
    friend Polynomial mul_term(const Polynomial& f, const FieldElement& c, const Monomial& m);
    friend Polynomial mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
    friend Polynomial make_monic(const Polynomial& f);

private:
    std::vector<Term> terms_;
    std::size_t nvars_ = 0;
    FieldSpec field_;
};

Polynomial add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial neg(const Polynomial& f);
Polynomial mul_term(const Polynomial& f, const FieldElement& c, const Monomial& m);
Polynomial mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial make_monic(const Polynomial& f);

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division: f = sum q_i d_i + r with no monomial of r
/// divisible by any leading monomial of the divisors. Divisor selection is
/// "first that divides" after sorting divisors ascending by leading monomial.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord);

} // namespace nres
