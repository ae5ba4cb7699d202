#include "noetherres/module.hpp"

#include <algorithm>
#include <map>

namespace nres {

const ModuleTerm& ModuleElement::leading_term() const {
    if (terms_.empty()) fail("ZeroModuleElement", "leading term of zero");
    return terms_.front();
}

ModuleElement ModuleElement::from_terms(std::vector<ModuleTerm> terms, const ModuleOrder& ord) {
    std::sort(terms.begin(), terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
        return ord.compare(a, b) == Cmp::Greater;
    });
    ModuleElement v;
    for (auto& t : terms) {
        if (t.c.is_zero()) continue;
        if (!v.terms_.empty() && v.terms_.back().pos == t.pos && v.terms_.back().m == t.m) {
            v.terms_.back().c = v.terms_.back().c + t.c;
            if (v.terms_.back().c.is_zero()) v.terms_.pop_back();
        } else {
            v.terms_.push_back(std::move(t));
        }
    }
    return v;
}

Cmp ModuleOrder::compare(const Monomial& m1, std::uint32_t pos1,
                         const Monomial& m2, std::uint32_t pos2) const {
    if (pos1 >= labels_.size() || pos2 >= labels_.size())
        fail("BasisIndexUnknown", "module term references an unknown basis index");
    Cmp c = base_.compare_product(labels_[pos1], m1, labels_[pos2], m2);
    if (c != Cmp::Equal) return c;
    if (pos1 != pos2) return pos1 < pos2 ? Cmp::Greater : Cmp::Less;
    return Cmp::Equal;
}

ModuleElement madd(const ModuleElement& a, const ModuleElement& b, const ModuleOrder& ord) {
    ModuleElement r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        Cmp c = ord.compare(a.terms_[i], b.terms_[j]);
        if (c == Cmp::Greater) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c == Cmp::Less) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            FieldElement s = a.terms_[i].c + b.terms_[j].c;
            if (!s.is_zero()) r.terms_.push_back({std::move(s), a.terms_[i].m, a.terms_[i].pos});
            ++i; ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

ModuleElement mneg(const ModuleElement& a) {
    ModuleElement r = a;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

ModuleElement msub(const ModuleElement& a, const ModuleElement& b, const ModuleOrder& ord) {
    return madd(a, mneg(b), ord);
}

ModuleElement mscale(const ModuleElement& a, const FieldElement& c, const Monomial& m) {
    ModuleElement r;
    if (c.is_zero()) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) {
        FieldElement p = t.c * c;
        if (!p.is_zero()) r.terms_.push_back({std::move(p), mul(t.m, m), t.pos});
    }
    return r;
}

ModuleElement make_monic(const ModuleElement& v) {
    if (v.is_zero()) return v;
    const FieldElement& lc = v.leading_term().c;
    if (lc.is_one()) return v;
    return mscale(v, lc.inverse(), Monomial(v.leading_term().m.nvars()));
}

ModuleDivisionResult module_divide(const ModuleElement& f,
                                   const std::vector<ModuleElement>& divisors,
                                   const ModuleOrder& ord) {
    // bucket the divisors by leading position for fast lookup
    std::map<std::uint32_t, std::vector<std::size_t>> by_pos;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
        if (divisors[k].is_zero()) fail("ZeroDivisor", "division by the zero module element");
        by_pos[divisors[k].leading_term().pos].push_back(k);
    }

    std::size_t nv = 0;
    if (!f.is_zero()) nv = f.leading_term().m.nvars();
    else if (!divisors.empty()) nv = divisors[0].leading_term().m.nvars();
    FieldSpec F;
    bool have_field = false;
    for (const auto& t : f.terms()) { F = FieldSpec(t.c.characteristic()); have_field = true; break; }
    if (!have_field && !divisors.empty())
        F = FieldSpec(divisors[0].leading_term().c.characteristic());

    ModuleDivisionResult res;
    res.quotients.assign(divisors.size(), Polynomial::zero(nv, F));

    ModuleElement p = f;
    std::vector<ModuleTerm> rem;
    while (!p.is_zero()) {
        const ModuleTerm& lt = p.leading_term();
        bool hit = false;
        auto it = by_pos.find(lt.pos);
        if (it != by_pos.end()) {
            for (std::size_t k : it->second) {
                const ModuleElement& d = divisors[k];
                if (divides(d.leading_term().m, lt.m)) {
                    FieldElement qc = lt.c / d.leading_term().c;
                    Monomial qm = quotient(lt.m, d.leading_term().m);
                    res.quotients[k] = add(res.quotients[k],
                                           Polynomial::monomial(qc, qm, F), ord.base());
                    p = msub(p, mscale(d, qc, qm), ord);
                    hit = true;
                    break;
                }
            }
        }
        if (!hit) {
            rem.push_back(lt);
            ModuleElement head = ModuleElement::from_terms({lt}, ord);
            p = msub(p, head, ord);
        }
    }
    res.remainder = ModuleElement::from_terms(std::move(rem), ord);
    return res;
}

std::vector<Monomial> element_labels(const std::vector<ModuleElement>& H, const ModuleOrder& ord) {
    std::vector<Monomial> out;
    out.reserve(H.size());
    for (const auto& h : H) {
        const ModuleTerm& lt = h.leading_term();
        out.push_back(mul(ord.labels()[lt.pos], lt.m));
    }
    return out;
}

SyzygyStep schreyer_syzygies(const std::vector<ModuleElement>& H, const ModuleOrder& ord,
                             SyzygyPairMode mode) {
    const std::size_t n = H.size();
    std::size_t nv = ord.base().nvars();

    // group element indices by leading position
    std::map<std::uint32_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i)
        groups[H[i].leading_term().pos].push_back(i);

    struct Cand {
        std::size_t i, j;  // positions into H, i < j
        Monomial l;        // lcm of the two leading monomials
        Monomial t;        // l / M_i, the leading term of the syzygy at e_i
    };
    std::vector<Cand> retained;
    for (auto& [pos, idxs] : groups) {
        (void)pos;
        if (idxs.size() < 2) continue;
        for (std::size_t a = 0; a < idxs.size(); ++a) {
            std::size_t i = idxs[a];
            const Monomial& Mi = H[i].leading_term().m;
            std::vector<Cand> cands;
            for (std::size_t b = a + 1; b < idxs.size(); ++b) {
                std::size_t j = idxs[b];
                Monomial l = lcm(Mi, H[j].leading_term().m);
                cands.push_back({i, j, l, quotient(l, Mi)});
            }
            if (mode == SyzygyPairMode::AllPairs) {
                for (auto& c : cands) retained.push_back(std::move(c));
                continue;
            }
            // keep the divisibility-minimal leading terms at this slot
            std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
                auto dx = x.t.total_degree(), dy = y.t.total_degree();
                if (dx != dy) return dx < dy;
                if (x.t != y.t) return x.t < y.t;
                return x.j < y.j;
            });
            std::vector<Cand> kept;
            for (auto& c : cands) {
                bool covered = false;
                for (const auto& k : kept)
                    if (divides(k.t, c.t)) { covered = true; break; }
                if (!covered) kept.push_back(std::move(c));
            }
            for (auto& c : kept) retained.push_back(std::move(c));
        }
    }

    // sort the syzygies by (leading position, leading monomial descending lex)
    // per the Schreyer-step discipline; the leading monomial of the syzygy
    // from (i, j) is t at position i.
    std::sort(retained.begin(), retained.end(), [&](const Cand& x, const Cand& y) {
        if (x.i != y.i) return x.i < y.i;
        if (x.t != y.t) {
            for (std::size_t v = 0; v < nv; ++v)
                if (x.t[v] != y.t[v]) return x.t[v] > y.t[v];
        }
        return x.j < y.j;
    });

    std::vector<Monomial> labels_cur = element_labels(H, ord);
    ModuleOrder next(ord.base(), labels_cur);

    SyzygyStep step{{}, {}, next};
    for (const auto& c : retained) {
        const ModuleElement& hi = H[c.i];
        const ModuleElement& hj = H[c.j];
        FieldElement ci = hi.leading_term().c;
        FieldElement cj = hj.leading_term().c;
        Monomial ti = quotient(c.l, hi.leading_term().m);
        Monomial tj = quotient(c.l, hj.leading_term().m);
        // S = (1/ci) t_i h_i - (1/cj) t_j h_j
        ModuleElement s = msub(mscale(hi, ci.inverse(), ti), mscale(hj, cj.inverse(), tj), ord);
        ModuleDivisionResult dv = module_divide(s, H, ord);
        if (!dv.remainder.is_zero())
            fail("NotAGroebnerBasis", "an S-pair does not reduce to zero");
        std::vector<ModuleTerm> syz;
        syz.push_back({ci.inverse(), ti, static_cast<std::uint32_t>(c.i)});
        syz.push_back({-(cj.inverse()), tj, static_cast<std::uint32_t>(c.j)});
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& t : dv.quotients[k].terms())
                syz.push_back({-t.c, t.m, static_cast<std::uint32_t>(k)});
        ModuleElement v = ModuleElement::from_terms(std::move(syz), next);
        if (v.is_zero() || v.leading_term().pos != c.i || v.leading_term().m != ti)
            fail("InternalError", "Schreyer syzygy has an unexpected leading term");
        step.syzygies.push_back(make_monic(v));
        step.labels.push_back(mul(labels_cur[c.i], ti));
    }
    return step;
}

Cmp compare_module_terms(const Monomial& M, std::uint32_t u, const Monomial& Mp, std::uint32_t v,
                         const std::vector<Monomial>& basis, const MonomialOrder& base) {
    ModuleOrder ord(base, basis);
    return ord.compare(M, u, Mp, v);
}

} // namespace nres
