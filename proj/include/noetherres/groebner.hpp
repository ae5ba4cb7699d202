#pragma once

#include "noetherres/poly.hpp"

namespace nres {

struct GroebnerBasis {
    std::vector<Polynomial> elements; // monic, sorted ascending by leading monomial
    MonomialOrder order;
    bool reduced = false;
};

/// Unique reduced monic Groebner basis of <gens> under ord. Buchberger with
/// Gebauer-Moeller pair elimination and sugar-degree selection.
GroebnerBasis reduced_groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& ord);

/// Unique remainder of f modulo G; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Minimal monomial generators of the leading-term ideal of G.
std::vector<Monomial> leading_ideal_generators(const GroebnerBasis& G);

} // namespace nres
