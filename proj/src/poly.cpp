#include "noetherres/poly.hpp"

#include <algorithm>
#include <numeric>

namespace nres {

Polynomial Polynomial::monomial(FieldElement c, Monomial m, FieldSpec field) {
    Polynomial p(m.nvars(), field);
    if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, std::size_t nvars, FieldSpec field,
                                  const MonomialOrder& ord) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.m, b.m) == Cmp::Greater;
    });
    Polynomial p(nvars, field);
    for (auto& t : terms) {
        if (t.c.is_zero()) continue;
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c = p.terms_.back().c + t.c;
            if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) fail("ZeroPolynomial", "leading term of zero");
    return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().m; }
const FieldElement& Polynomial::leading_coefficient() const { return leading_term().c; }

bool Polynomial::is_homogeneous(const WeightVector& w) const {
    return homogeneous_degree(w).has_value();
}

std::optional<std::uint64_t> Polynomial::homogeneous_degree(const WeightVector& w) const {
    if (terms_.empty()) return 0;
    std::uint64_t d = omega_degree(terms_.front().m, w);
    for (const auto& t : terms_)
        if (omega_degree(t.m, w) != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::resorted(const MonomialOrder& ord) const {
    return from_terms(terms_, nvars_, field_, ord);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Polynomial add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    Polynomial r(f.nvars_, f.field_);
    r.terms_.reserve(f.terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms_.size() && j < g.terms_.size()) {
        Cmp c = ord.compare(f.terms_[i].m, g.terms_[j].m);
        if (c == Cmp::Greater) {
            r.terms_.push_back(f.terms_[i++]);
        } else if (c == Cmp::Less) {
            r.terms_.push_back(g.terms_[j++]);
        } else {
            FieldElement s = f.terms_[i].c + g.terms_[j].c;
            if (!s.is_zero()) r.terms_.push_back({std::move(s), f.terms_[i].m});
            ++i; ++j;
        }
    }
    for (; i < f.terms_.size(); ++i) r.terms_.push_back(f.terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
    return r;
}

Polynomial neg(const Polynomial& f) {
    Polynomial r = f;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    return add(f, neg(g), ord);
}

Polynomial mul_term(const Polynomial& f, const FieldElement& c, const Monomial& m) {
    Polynomial r(f.nvars_, f.field_);
    if (c.is_zero()) return r;
    r.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_) {
        FieldElement p = t.c * c;
        if (!p.is_zero()) r.terms_.push_back({std::move(p), mul(t.m, m)});
    }
    return r; // multiplication by a monomial preserves the order
}

Polynomial mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    Polynomial acc(f.nvars_, f.field_);
    for (const auto& t : g.terms_)
        acc = add(acc, mul_term(f, t.c, t.m), ord);
    return acc;
}

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    if (f.leading_coefficient().is_one()) return f;
    FieldElement inv = f.leading_coefficient().inverse();
    Polynomial r = f;
    for (auto& t : r.terms_) t.c = t.c * inv;
    return r;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord) {
    for (const auto& d : divisors)
        if (d.is_zero()) fail("ZeroDivisor", "division by the zero polynomial");

    // divisor selection: first (ascending leading monomial) that divides
    std::vector<std::size_t> idx(divisors.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        Cmp c = ord.compare(divisors[a].leading_monomial(), divisors[b].leading_monomial());
        if (c != Cmp::Equal) return c == Cmp::Less;
        return a < b;
    });

    DivisionResult res;
    res.quotients.assign(divisors.size(), Polynomial::zero(f.nvars(), f.field()));
    res.remainder = Polynomial::zero(f.nvars(), f.field());
    Polynomial p = f;
    std::vector<Term> rem;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        bool reduced = false;
        for (std::size_t k : idx) {
            const Polynomial& d = divisors[k];
            if (divides(d.leading_monomial(), lt.m)) {
                FieldElement qc = lt.c / d.leading_coefficient();
                Monomial qm = quotient(lt.m, d.leading_monomial());
                res.quotients[k] = add(res.quotients[k],
                                       Polynomial::monomial(qc, qm, f.field()), ord);
                p = sub(p, mul_term(d, qc, qm), ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(lt);
            Polynomial head = Polynomial::monomial(lt.c, lt.m, f.field());
            p = sub(p, head, ord);
        }
    }
    res.remainder = Polynomial::from_terms(std::move(rem), f.nvars(), f.field(), ord);
    return res;
}

} // namespace nres
