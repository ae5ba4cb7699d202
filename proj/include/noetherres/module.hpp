#pragma once

#include <cstdint>

#include "noetherres/groebner.hpp"

namespace nres {

struct ModuleTerm {
    FieldElement c;
    Monomial m;        // monomial coefficient in the base ring
    std::uint32_t pos; // basis index
};

/// Element of a free module with a labeled monomial basis: a sum of
/// (coefficient, monomial, basis index) terms kept strictly descending
/// under the active module order.
class ModuleElement {
public:
    ModuleElement() = default;

    const std::vector<ModuleTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const ModuleTerm& leading_term() const;

    static ModuleElement from_terms(std::vector<ModuleTerm> terms, const class ModuleOrder& ord);

    friend class ModuleOrder;
    friend ModuleElement madd(const ModuleElement&, const ModuleElement&, const ModuleOrder&);
    friend ModuleElement mneg(const ModuleElement&);
    friend ModuleElement msub(const ModuleElement&, const ModuleElement&, const ModuleOrder&);
    friend ModuleElement mscale(const ModuleElement&, const FieldElement&, const Monomial&);
    friend ModuleElement make_monic(const ModuleElement& v);

private:
    std::vector<ModuleTerm> terms_;
};

/// Order on module terms induced by monomial labels on the basis:
/// M e_u > M' e_v iff label(u)*M > label(v)*M' in the base order, with
/// ties broken toward the smaller basis index. With the labels set to the
/// standard monomials B0 this is the Schreyer-like order; with the labels
/// of a Groebner basis it is the induced Schreyer order of the next step.
class ModuleOrder {
public:
    ModuleOrder(MonomialOrder base, std::vector<Monomial> labels)
        : base_(std::move(base)), labels_(std::move(labels)) {}

    Cmp compare(const Monomial& m1, std::uint32_t pos1,
                const Monomial& m2, std::uint32_t pos2) const;
    Cmp compare(const ModuleTerm& a, const ModuleTerm& b) const {
        return compare(a.m, a.pos, b.m, b.pos);
    }

    const std::vector<Monomial>& labels() const { return labels_; }
    const MonomialOrder& base() const { return base_; }
    std::size_t rank() const { return labels_.size(); }

private:
    MonomialOrder base_;
    std::vector<Monomial> labels_;
};

ModuleElement madd(const ModuleElement& a, const ModuleElement& b, const ModuleOrder& ord);
ModuleElement mneg(const ModuleElement& a);
ModuleElement msub(const ModuleElement& a, const ModuleElement& b, const ModuleOrder& ord);
ModuleElement mscale(const ModuleElement& a, const FieldElement& c, const Monomial& m);
ModuleElement make_monic(const ModuleElement& v);

struct ModuleDivisionResult {
    std::vector<Polynomial> quotients; // one per divisor
    ModuleElement remainder;
};

ModuleDivisionResult module_divide(const ModuleElement& f,
                                   const std::vector<ModuleElement>& divisors,
                                   const ModuleOrder& ord);

enum class SyzygyPairMode {
    Minimal,  // keep only divisibility-minimal leading terms of the syzygy module
    AllPairs, // keep every nonzero same-index S-pair reduction
};

/// One Schreyer step. Input H must be a Groebner basis of its span under
/// ord (errors with NotAGroebnerBasis otherwise). Returns the reductions of
/// the same-index S-pairs as generators of the syzygy module, together with
/// the monomial labels label(h_i) * lcm/M_i inducing the next Schreyer
/// order. Syzygies are sorted by (leading position, then leading monomial
/// descending lex) so that one base-ring variable disappears from the
/// leading terms at every iteration.
struct SyzygyStep {
    std::vector<ModuleElement> syzygies; // over the basis indexed by H
    std::vector<Monomial> labels;        // one per syzygy
    ModuleOrder order;                   // order on the new free module
};

SyzygyStep schreyer_syzygies(const std::vector<ModuleElement>& H, const ModuleOrder& ord,
                             SyzygyPairMode mode = SyzygyPairMode::Minimal);

/// Module labels for the free module covering H: label(h) = label(LT pos) * LT monomial.
std::vector<Monomial> element_labels(const std::vector<ModuleElement>& H, const ModuleOrder& ord);

/// compare_module_terms from the artifact surface: M e_u vs M' e_v over the
/// basis monomials B0; errors with BasisIndexUnknown on a bad index.
Cmp compare_module_terms(const Monomial& M, std::uint32_t u, const Monomial& Mp, std::uint32_t v,
                         const std::vector<Monomial>& basis, const MonomialOrder& base);

} // namespace nres
