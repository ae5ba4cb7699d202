#pragma once

#include "noetherres/shortres.hpp"

namespace nres {

using Degree3 = std::array<std::uint64_t, 3>;

/// The monomial sets of the dimension-3 Schreyer resolution and its pruning.
struct Dim3Sets {
    std::vector<Monomial> B0, B1prime, B2prime;
    std::vector<Monomial> B1, B2;          // populated by prune_dim3
    std::vector<Monomial> C, C1, C2;       // the pruning candidates
    std::map<Monomial, std::vector<Monomial>> perUGenerators; // u -> sorted G(I_u)
    std::map<Monomial, std::vector<Monomial>> lcmLadders;     // u -> L_u
    bool pruned = false;
};

/// The B_i' sets of the Schreyer resolution of a 3-dimensional simplicial
/// toric ring, built from the reduced basis and monomial bookkeeping only.
/// Errors: NotDimension3; NotPrimeBinomial when the reduced basis has a
/// non-binomial element or a leading term involving x_n.
Dim3Sets schreyer_sets_dim3(ToricContext& ctx);

/// Same computation on a raw ideal (used by the CLI's generator-file path);
/// subject to the same binomial checks.
Dim3Sets schreyer_sets_dim3_ideal(const GroebnerBasis& G, const WeightVector& w);

/// Algorithm-3 pruning: decides membership of the C candidates in B1 and of
/// the B2' monomials in B2 by monomial membership in I + <x_{n-2}> and
/// I + <x_n>. Errors with NotToric if the ideal is not a toric ideal.
void prune_dim3(ToricContext& ctx, Dim3Sets& sets);

/// Raw-ideal variant; refuses (NotToric) unless the reduced basis consists
/// of binomials with coefficients 1, -1 avoiding x_n in their leading terms.
void prune_dim3_ideal(const GroebnerBasis& G, const WeightVector& w, const FieldSpec& F,
                      Dim3Sets& sets);

/// Full pruning pipeline on a raw ideal: the toricness check (NotToric)
/// runs before anything else.
Dim3Sets schreyer_and_prune_ideal(const GroebnerBasis& G, const WeightVector& w,
                                  const FieldSpec& F);

enum class DegreeClass { Apery, E31, E20, E30, E33, Simplex, Other };

std::string degree_class_name(DegreeClass c);

/// Classifies s = A.beta by the seven membership queries s - sum_F e in S
/// over the nonempty subsets F of the extremal rays.
DegreeClass classify_degree(const Monomial& beta, ToricContext& ctx);

struct ExceptionalSets {
    std::vector<Degree3> AP, E31, E20, E30, E33; // sorted, duplicate-free
};

/// Apery set plus the exceptional degree sets read off the pruned short
/// resolution: AP from B0, E33 from B2, and the B1 degrees classified
/// among E31 / E20 / E30 (an E30 degree accounts for two B1 monomials).
ExceptionalSets apery_and_exceptional_sets(ToricContext& ctx);
ExceptionalSets apery_and_exceptional_sets(ToricContext& ctx, const Dim3Sets& pruned);

/// Signed sum  sum_AP t^s - sum_E31 t^s - sum_E20 t^s - 2 sum_E30 t^s + sum_E33 t^s.
MultiPoly3 multigraded_hilbert_numerator(const ExceptionalSets& E);

/// max{ m(AP), m(E31)-1, m(E20)-1, m(E30)-1, m(E33)-2 } with
/// m(F) = max{ |s|/D : s in F }; empty sets are skipped.
/// Errors with NotEquigenerated when the presentation has no common degree D.
std::int64_t surface_regularity(const ExceptionalSets& E, std::uint32_t D);

/// |sA|, the size of the s-fold sumset of the generator set.
std::uint64_t sumset_size(const ToricPresentation& P, std::uint64_t s);

} // namespace nres
