#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "noetherres/errors.hpp"

namespace nres {

using Exp = std::uint32_t;

/// Exponent vector of a monomial in a ring with a fixed variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exp> e) : e_(std::move(e)) {}

    static Monomial variable(std::size_t nvars, std::size_t i, Exp k = 1) {
        Monomial m(nvars);
        m.e_[i] = k;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    Exp operator[](std::size_t i) const { return e_[i]; }
    Exp& operator[](std::size_t i) { return e_[i]; }
    const std::vector<Exp>& exponents() const { return e_; }

    bool is_one() const;
    std::uint64_t total_degree() const;

    // container-friendly canonical comparison (not a monomial order)
    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<Exp> e_;
};

/// Positive integer weights, one per variable.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<std::uint32_t> w);

    std::size_t size() const { return w_.size(); }
    std::uint32_t operator[](std::size_t i) const { return w_[i]; }
    const std::vector<std::uint32_t>& values() const { return w_; }
    std::uint32_t gcd() const;

    bool operator==(const WeightVector&) const = default;

private:
    std::vector<std::uint32_t> w_;
};

std::uint64_t omega_degree(const Monomial& m, const WeightVector& w);

Monomial mul(const Monomial& a, const Monomial& b); // overflow-checked
bool divides(const Monomial& a, const Monomial& b); // a | b
Monomial quotient(const Monomial& b, const Monomial& a); // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// True when every variable of m lies in [lo, hi).
bool supported_in(const Monomial& m, std::size_t lo, std::size_t hi);

/// Zero out exponents outside [lo, hi).
Monomial restrict_to(const Monomial& m, std::size_t lo, std::size_t hi);

} // namespace nres
