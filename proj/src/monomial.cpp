#include "noetherres/monomial.hpp"

#include <limits>
#include <numeric>

namespace nres {

bool Monomial::is_one() const {
    for (Exp v : e_)
        if (v) return false;
    return true;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (Exp v : e_) d += v;
    return d;
}

WeightVector::WeightVector(std::vector<std::uint32_t> w) : w_(std::move(w)) {
    for (auto v : w_)
        if (v == 0) fail("InvalidWeight", "weights must be positive");
}

std::uint32_t WeightVector::gcd() const {
    std::uint32_t g = 0;
    for (auto v : w_) g = std::gcd(g, v);
    return g == 0 ? 1 : g;
}

std::uint64_t omega_degree(const Monomial& m, const WeightVector& w) {
    if (m.nvars() != w.size())
        fail("LengthMismatch", "monomial has " + std::to_string(m.nvars()) +
                                   " variables, weight vector " + std::to_string(w.size()));
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        d += static_cast<std::uint64_t>(m[i]) * w[i];
    return d;
}

namespace {
void check_len(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        fail("LengthMismatch", "exponent vectors of different lengths");
}
} // namespace

Monomial mul(const Monomial& a, const Monomial& b) {
    check_len(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(a[i]) + b[i];
        if (s > std::numeric_limits<Exp>::max())
            fail("ExponentOverflow", "exponent exceeds 32-bit range");
        r[i] = static_cast<Exp>(s);
    }
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    check_len(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    check_len(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] > b[i]) fail("NotDivisible", "monomial quotient is not polynomial");
        r[i] = b[i] - a[i];
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_len(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_len(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    check_len(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

bool supported_in(const Monomial& m, std::size_t lo, std::size_t hi) {
    for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m[i] && (i < lo || i >= hi)) return false;
    return true;
}

Monomial restrict_to(const Monomial& m, std::size_t lo, std::size_t hi) {
    Monomial r(m.nvars());
    for (std::size_t i = lo; i < hi && i < m.nvars(); ++i) r[i] = m[i];
    return r;
}

} // namespace nres
