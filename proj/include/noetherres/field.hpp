#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "noetherres/errors.hpp"

namespace nres {

/// Coefficient field: Q when characteristic is 0, GF(p) otherwise.
/// p must be a prime below 2^31 so that products of canonical residues
/// fit in a 64-bit intermediate.
class FieldSpec {
public:
    FieldSpec() = default; // Q
    explicit FieldSpec(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    bool operator==(const FieldSpec&) const = default;

private:
    std::uint32_t p_ = 0;
};

/// Immutable field element. Rationals are kept canonical (lowest terms,
/// positive denominator); residues are the canonical representative in [0, p).
class FieldElement {
public:
    FieldElement() = default; // zero of Q; reinterpreted via spec on ops

    static FieldElement zero(const FieldSpec& F);
    static FieldElement one(const FieldSpec& F);
    static FieldElement from_int(long v, const FieldSpec& F);
    static FieldElement from_mpz(const mpz_class& v, const FieldSpec& F);
    static FieldElement from_fraction(const mpz_class& num, const mpz_class& den,
                                      const FieldSpec& F);
    /// Accepts "7", "-3", "3/4".
    static FieldElement parse(const std::string& s, const FieldSpec& F);

    bool is_zero() const;
    bool is_one() const;
    std::uint32_t characteristic() const { return p_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const; // throws ZeroInversion on 0

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Re-canonicalize (idempotent; rationals are already kept canonical).
    FieldElement normalized() const;

    std::string str() const;

    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

private:
    mpq_class q_;          // payload for characteristic 0
    std::uint64_t r_ = 0;  // payload for characteristic p
    std::uint32_t p_ = 0;

    void check_same(const FieldElement& o) const;
};

/// Multiplicative inverse of a in F; errors with ZeroInversion if a = 0.
FieldElement field_inverse(const FieldElement& a, const FieldSpec& F);

} // namespace nres
