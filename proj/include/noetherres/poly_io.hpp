#pragma once

#include <string>
#include <vector>

#include "noetherres/poly.hpp"

namespace nres {

/// Naming scheme for ring variables: an optional leading block t1..td
/// followed by x1..xn. Ring index 0..d-1 = t's, d..d+n-1 = x's.
struct VarNames {
    std::size_t tcount = 0;
    std::size_t xcount = 0;

    std::size_t nvars() const { return tcount + xcount; }
    std::string name(std::size_t i) const;
    /// Returns the ring index, or npos when `s` is not a variable here.
    std::size_t index(const std::string& s) const;

    static VarNames xs(std::size_t n) { return {0, n}; }
};

/// Grammar: sum of signed terms; a term is an optional integer or a/b
/// coefficient followed by variable powers (v, v^k) with '*' optional.
Polynomial parse_polynomial(const std::string& text, const VarNames& names,
                            const FieldSpec& field, const MonomialOrder& ord);

std::string monomial_str(const Monomial& m, const VarNames& names);
std::string polynomial_str(const Polynomial& f, const VarNames& names);

} // namespace nres
