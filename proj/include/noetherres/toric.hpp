#pragma once

#include <map>
#include <optional>

#include "noetherres/groebner.hpp"

namespace nres {

/// Generator matrix of a simplicial affine semigroup in the normal form
/// where the last d columns are positive multiples of the canonical basis
/// vectors of N^d, in order. Column i is the multidegree of x_{i+1}.
class ToricPresentation {
public:
    /// matrix[r][c]: d rows, n columns. Errors: ZeroColumn,
    /// NotSimplicialNormalForm.
    static ToricPresentation validate(const std::vector<std::vector<std::uint32_t>>& matrix);

    std::size_t dim() const { return d_; }
    std::size_t nvars() const { return n_; }
    const std::vector<std::vector<std::uint32_t>>& matrix() const { return m_; }
    std::vector<std::uint32_t> column(std::size_t c) const;
    const WeightVector& weights() const { return weights_; } // omega_i = |a_i|
    const std::vector<std::uint32_t>& extremal_scales() const { return scales_; }
    std::optional<std::uint32_t> homogeneous_degree() const { return D_; }

private:
    std::vector<std::vector<std::uint32_t>> m_;
    std::size_t d_ = 0, n_ = 0;
    WeightVector weights_;
    std::vector<std::uint32_t> scales_;
    std::optional<std::uint32_t> D_;
};

/// Binomial generators of the toric ideal of an arbitrary d x n matrix of
/// naturals, by eliminating t_1..t_d from <x_i - t^{a_i}> with a block
/// order (t-block before x-block). The result is the reduced Groebner
/// basis of I_A for the omega-graded reverse lexicographic order.
std::vector<Polynomial> toric_ideal_from_matrix(
    const std::vector<std::vector<std::uint32_t>>& matrix, const FieldSpec& F);

std::vector<Polynomial> toric_ideal(const ToricPresentation& P, const FieldSpec& F);

/// A . alpha, the S-multidegree of a monomial.
std::vector<std::uint64_t> multidegree(const Monomial& m, const ToricPresentation& P);

/// Per-presentation cache of reduced Groebner bases: the toric ideal's own
/// basis and the bases of I_A + <x^gamma> used by membership queries.
class ToricContext {
public:
    ToricContext(ToricPresentation P, FieldSpec F);

    const ToricPresentation& presentation() const { return P_; }
    const FieldSpec& field() const { return F_; }
    const MonomialOrder& order() const { return ord_; }
    const GroebnerBasis& ideal_basis(); // reduced GB of I_A under >_omega
    const GroebnerBasis& ideal_plus_basis(const Monomial& gamma); // I_A + <x^gamma>

private:
    ToricPresentation P_;
    FieldSpec F_;
    MonomialOrder ord_;
    std::optional<GroebnerBasis> gb_;
    std::map<Monomial, GroebnerBasis> gb_plus_;
};

/// Decides b - c in S for b = A.beta, c = A.gamma: true iff the normal form
/// of x^beta modulo the reduced basis of I_A + <x^gamma> vanishes.
bool semigroup_contains(const Monomial& beta, const Monomial& gamma, ToricContext& ctx);

} // namespace nres
