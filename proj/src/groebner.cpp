#include "noetherres/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nres {

namespace {

struct Entry {
    Polynomial f; // monic
    Monomial lt;
    std::uint64_t sugar;
};

struct Pair {
    std::size_t i, j; // i < j
    Monomial lcm;
    std::uint64_t sugar;
};

struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        Cmp c = ord->compare(a.lcm, b.lcm);
        if (c != Cmp::Equal) return c == Cmp::Less;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

// deterministic pre-sort of the input generators
bool canonical_less(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
    Cmp c = ord.compare(a.leading_monomial(), b.leading_monomial());
    if (c != Cmp::Equal) return c == Cmp::Less;
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a.terms()[k].m != b.terms()[k].m)
            return a.terms()[k].m < b.terms()[k].m;
    }
    return false;
}

class Engine {
public:
    Engine(const MonomialOrder& ord) : ord_(ord), pairs_(PairLess{&ord}) {}

    void add_generator(const Polynomial& g) {
        Polynomial r = reduce_full(g);
        if (!r.is_zero()) insert(make_monic(r));
    }

    void run() {
        while (!pairs_.empty()) {
            Pair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            Polynomial s = spoly(p);
            Polynomial r = reduce_full(s);
            if (!r.is_zero()) insert(make_monic(r));
        }
    }

    std::vector<Polynomial> reduced_basis() const {
        // minimal: keep only leading monomials not divisible by another kept one
        std::vector<std::size_t> order_by_lt(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) order_by_lt[i] = i;
        std::sort(order_by_lt.begin(), order_by_lt.end(), [&](std::size_t a, std::size_t b) {
            Cmp c = ord_.compare(basis_[a].lt, basis_[b].lt);
            if (c != Cmp::Equal) return c == Cmp::Less;
            return a < b;
        });
        std::vector<std::size_t> kept;
        for (std::size_t i : order_by_lt) {
            bool redundant = false;
            for (std::size_t k : kept)
                if (divides(basis_[k].lt, basis_[i].lt)) { redundant = true; break; }
            if (!redundant) kept.push_back(i);
        }
        // inter-reduce tails
        std::vector<Polynomial> out;
        out.reserve(kept.size());
        for (std::size_t idx = 0; idx < kept.size(); ++idx) {
            std::vector<Polynomial> others;
            others.reserve(kept.size() - 1);
            for (std::size_t k = 0; k < kept.size(); ++k)
                if (k != idx) others.push_back(basis_[kept[k]].f);
            if (others.empty()) out.push_back(basis_[kept[idx]].f);
            else out.push_back(make_monic(divide(basis_[kept[idx]].f, others, ord_).remainder));
        }
        std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
            return canonical_less(a, b, ord_);
        });
        return out;
    }

private:
    const MonomialOrder& ord_;
    std::vector<Entry> basis_;
    std::multiset<Pair, PairLess> pairs_;
    std::vector<std::size_t> by_lt_; // basis indices sorted ascending by leading monomial

    Polynomial spoly(const Pair& p) {
        const Entry& a = basis_[p.i];
        const Entry& b = basis_[p.j];
        Polynomial fa = mul_term(a.f, FieldElement::one(a.f.field()), quotient(p.lcm, a.lt));
        Polynomial fb = mul_term(b.f, FieldElement::one(b.f.field()), quotient(p.lcm, b.lt));
        return sub(fa, fb, ord_);
    }

    Polynomial reduce_full(const Polynomial& f) {
        Polynomial p = f;
        std::vector<Term> rem;
        while (!p.is_zero()) {
            const Term& lt = p.leading_term();
            bool hit = false;
            for (std::size_t k : by_lt_) {
                const Entry& e = basis_[k];
                if (divides(e.lt, lt.m)) {
                    p = sub(p, mul_term(e.f, lt.c, quotient(lt.m, e.lt)), ord_);
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                rem.push_back(lt);
                p = sub(p, Polynomial::monomial(lt.c, lt.m, p.field()), ord_);
            }
        }
        return Polynomial::from_terms(std::move(rem), f.nvars(), f.field(), ord_);
    }

    void insert(Polynomial f) {
        std::size_t t = basis_.size();
        Monomial mt = f.leading_monomial();
        std::uint64_t sug = 0;
        for (const auto& term : f.terms()) sug = std::max(sug, term.m.total_degree());
        basis_.push_back({std::move(f), mt, sug});

        // Gebauer-Moeller update of the pair set
        struct Cand { std::size_t i; Monomial l; bool keep = true; };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (std::size_t i = 0; i < t; ++i)
            cands.push_back({i, lcm(basis_[i].lt, mt)});
        // criterion M: drop (i,t) when another new pair's lcm properly divides its lcm
        for (auto& a : cands) {
            for (const auto& b : cands) {
                if (a.i == b.i || !b.keep) continue;
                if (b.l != a.l && divides(b.l, a.l)) { a.keep = false; break; }
            }
        }
        // criterion F: among equal lcms keep a single pair, preferring a coprime one
        std::map<Monomial, std::size_t> rep;
        for (std::size_t k = 0; k < cands.size(); ++k) {
            if (!cands[k].keep) continue;
            auto it = rep.find(cands[k].l);
            if (it == rep.end()) {
                rep.emplace(cands[k].l, k);
            } else {
                bool cur_cop = coprime(basis_[cands[it->second].i].lt, mt);
                bool new_cop = coprime(basis_[cands[k].i].lt, mt);
                if (!cur_cop && new_cop) {
                    cands[it->second].keep = false;
                    it->second = k;
                } else {
                    cands[k].keep = false;
                }
            }
        }
        // criterion B: coprime leading monomials reduce to zero
        for (auto& a : cands)
            if (a.keep && coprime(basis_[a.i].lt, mt)) a.keep = false;
        // chain criterion on the old pairs
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Pair& p = *it;
            if (divides(mt, p.lcm) && lcm(basis_[p.i].lt, mt) != p.lcm &&
                lcm(basis_[p.j].lt, mt) != p.lcm) {
                it = pairs_.erase(it);
            } else {
                ++it;
            }
        }
        for (const auto& a : cands) {
            if (!a.keep) continue;
            std::uint64_t sa = basis_[a.i].sugar + quotient(a.l, basis_[a.i].lt).total_degree();
            std::uint64_t sb = sug + quotient(a.l, mt).total_degree();
            pairs_.insert({a.i, t, a.l, std::max(sa, sb)});
        }

        by_lt_.push_back(t);
        std::sort(by_lt_.begin(), by_lt_.end(), [&](std::size_t x, std::size_t y) {
            Cmp c = ord_.compare(basis_[x].lt, basis_[y].lt);
            if (c != Cmp::Equal) return c == Cmp::Less;
            return x < y;
        });
    }
};

} // namespace

GroebnerBasis reduced_groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& ord) {
    std::vector<Polynomial> prepped;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        prepped.push_back(make_monic(g.resorted(ord)));
    }
    std::sort(prepped.begin(), prepped.end(), [&](const Polynomial& a, const Polynomial& b) {
        return canonical_less(a, b, ord);
    });

    Engine eng(ord);
    for (const auto& g : prepped) eng.add_generator(g);
    eng.run();

    GroebnerBasis G{eng.reduced_basis(), ord, true};
    return G;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (G.elements.empty()) return f.resorted(G.order);
    return divide(f.resorted(G.order), G.elements, G.order).remainder;
}

std::vector<Monomial> leading_ideal_generators(const GroebnerBasis& G) {
    std::vector<Monomial> lts;
    lts.reserve(G.elements.size());
    for (const auto& g : G.elements) lts.push_back(g.leading_monomial());
    // minimalize (already minimal for a reduced basis, but inputs may vary)
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < lts.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < lts.size(); ++j) {
            if (i == j) continue;
            if (divides(lts[j], lts[i]) && (lts[j] != lts[i] || j < i)) { redundant = true; break; }
        }
        if (!redundant) out.push_back(lts[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nres
