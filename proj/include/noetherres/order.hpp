#pragma once

#include <memory>
#include <vector>

#include "noetherres/monomial.hpp"

namespace nres {

enum class Cmp { Less, Equal, Greater };

inline Cmp flip(Cmp c) {
    return c == Cmp::Less ? Cmp::Greater : (c == Cmp::Greater ? Cmp::Less : Cmp::Equal);
}

/// A global monomial order. Three kinds are provided:
///   - weighted degrevlex: compare omega-degrees, then break ties by the
///     "last nonzero entry of the exponent difference is negative" rule;
///   - pure lex along a variable priority sequence;
///   - block elimination: compare the first `split` variables with one
///     order, then the rest with another.
class MonomialOrder {
public:
    static MonomialOrder weighted_degrevlex(WeightVector w);
    static MonomialOrder lex(std::vector<std::size_t> priority);
    static MonomialOrder block(std::size_t split, MonomialOrder first, MonomialOrder second);

    Cmp compare(const Monomial& a, const Monomial& b) const;

    /// compare(a1*m1, a2*m2) without materializing the products.
    Cmp compare_product(const Monomial& a1, const Monomial& m1,
                        const Monomial& a2, const Monomial& m2) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::Less; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::Greater; }

    std::size_t nvars() const;
    const WeightVector& weights() const; // degrevlex only

private:
    enum class Kind { DegRevLex, Lex, Block } kind_ = Kind::DegRevLex;
    WeightVector w_;
    std::vector<std::size_t> priority_;
    std::size_t split_ = 0;
    std::shared_ptr<const MonomialOrder> first_, second_;

    Cmp compare_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;
    friend class ModuleOrder;
};

/// compare_monomials per the order definition; checks lengths.
Cmp compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

} // namespace nres
