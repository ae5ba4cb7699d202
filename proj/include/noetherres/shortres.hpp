#pragma once

#include "noetherres/intpoly.hpp"
#include "noetherres/resolution.hpp"
#include "noetherres/toric.hpp"

namespace nres {

struct ShortResInput {
    std::vector<Polynomial> generators;
    WeightVector weights;
    std::size_t dim = 0; // d, so that A = k[x_{n-d+1},...,x_n]
    FieldSpec field;
    std::optional<ToricPresentation> toric;
};

ShortResInput make_toric_input(const ToricPresentation& P, const FieldSpec& F);

/// Standard monomials of in(I) + <x_{n-d+1},...,x_n>: a minimal generating
/// set of R/I as A-module. Sorted descending lexicographically reading the
/// exponents of x_{n-d}, x_{n-d-1}, ..., x_1, which fixes the labeling
/// u_1 > u_2 > ... used by every later step. Errors with NotNoetherPosition
/// when the set is infinite.
std::vector<Monomial> standard_monomials_B0(const std::vector<Monomial>& in_I,
                                            std::size_t nvars, std::size_t d);

/// Minimal monomial generators of (in(I) : u) restricted to the last d
/// variables.
std::vector<Monomial> colon_into_A(const std::vector<Monomial>& in_I, const Monomial& u,
                                   std::size_t d);

struct SyzygyGenerators {
    std::vector<Monomial> B1prime;      // u * M, in processing order
    std::vector<ModuleElement> H;       // reduced GB of ker(psi_0) under >_SL
    std::vector<Monomial> B0;           // the basis labels (copied for convenience)
};

/// The kernel generators M_alpha e_u - sum f_{alpha,v} e_v for every
/// x^alpha = u*M in B1'. H is sorted by ascending basis index, then by
/// leading monomial descending lex, the discipline that makes one variable
/// disappear per Schreyer step.
SyzygyGenerators syzygy_generators(const GroebnerBasis& G, const std::vector<Monomial>& B0,
                                   const WeightVector& w, std::size_t d);

struct ShortResResult {
    GroebnerBasis gb;
    std::vector<Monomial> B0;
    GradedFreeResolution schreyer; // not necessarily minimal
    GradedFreeResolution minimal;
    std::size_t pd_A = 0;
    std::size_t depth = 0;
    std::size_t pd_R = 0;
    std::int64_t multiplicity = 0;
};

/// The whole pipeline: reduced basis, B0, kernel generators, iterated
/// Schreyer steps (at most d), then minimalization.
ShortResResult short_resolution(const ShortResInput& input);

/// Numerator of the weighted Hilbert series from any graded free
/// resolution: sum_i sum_{v in B_i} (-1)^i t^{deg v}.
IntPoly hilbert_series_numerator(const GradedFreeResolution& res);

/// Alternating sum of the ranks; equals the numerator at t = 1.
std::int64_t multiplicity(const GradedFreeResolution& res);

/// max{ s/W - i } over all shifts of a minimal resolution, where W is the
/// common weight. Errors with NotStandardGraded when the weights are not
/// all equal.
std::int64_t regularity_from_resolution(const GradedFreeResolution& res);

} // namespace nres
