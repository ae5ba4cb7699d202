#include "noetherres/field.hpp"

namespace nres {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, 0 < a < p
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt; nt = tmp;
        tmp = r - q * nr;
        r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
    if (p == 0) return;
    if (p >= (1u << 31) || !is_prime_u32(p))
        fail("InvalidCharacteristic", "characteristic must be 0 or a prime < 2^31, got " + std::to_string(p));
}

FieldElement FieldElement::zero(const FieldSpec& F) {
    FieldElement e;
    e.p_ = F.characteristic();
    return e;
}

FieldElement FieldElement::one(const FieldSpec& F) { return from_int(1, F); }

FieldElement FieldElement::from_int(long v, const FieldSpec& F) {
    FieldElement e;
    e.p_ = F.characteristic();
    if (e.p_ == 0) {
        e.q_ = v;
    } else {
        long m = v % static_cast<long>(e.p_);
        if (m < 0) m += static_cast<long>(e.p_);
        e.r_ = static_cast<std::uint64_t>(m);
    }
    return e;
}

FieldElement FieldElement::from_mpz(const mpz_class& v, const FieldSpec& F) {
    FieldElement e;
    e.p_ = F.characteristic();
    if (e.p_ == 0) {
        e.q_ = v;
    } else {
        mpz_class m = v % static_cast<unsigned long>(e.p_);
        if (m < 0) m += static_cast<unsigned long>(e.p_);
        e.r_ = m.get_ui();
    }
    return e;
}

FieldElement FieldElement::from_fraction(const mpz_class& num, const mpz_class& den,
                                         const FieldSpec& F) {
    if (den == 0) fail("ZeroInversion", "fraction with zero denominator");
    if (F.is_rational()) {
        FieldElement e;
        e.q_ = mpq_class(num, den);
        e.q_.canonicalize();
        return e;
    }
    return from_mpz(num, F) / from_mpz(den, F);
}

FieldElement FieldElement::parse(const std::string& s, const FieldSpec& F) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return from_mpz(mpz_class(s), F);
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        return from_fraction(num, den, F);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad coefficient literal: '" + s + "'");
    }
}

bool FieldElement::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool FieldElement::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void FieldElement::check_same(const FieldElement& o) const {
    if (p_ != o.p_)
        fail("FieldMismatch", "operands live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement e;
    e.p_ = p_;
    if (p_ == 0) e.q_ = q_ + o.q_;
    else {
        std::uint64_t s = r_ + o.r_;
        e.r_ = s >= p_ ? s - p_ : s;
    }
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    FieldElement e;
    e.p_ = p_;
    if (p_ == 0) e.q_ = q_ - o.q_;
    else e.r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement e;
    e.p_ = p_;
    if (p_ == 0) e.q_ = q_ * o.q_;
    else e.r_ = (r_ * o.r_) % p_; // residues < 2^31, product fits in 64 bits
    return e;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail("ZeroInversion", "inverse of zero");
    FieldElement e;
    e.p_ = p_;
    if (p_ == 0) e.q_ = 1 / q_;
    else e.r_ = mod_inverse(r_, p_);
    return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::operator-() const {
    FieldElement e;
    e.p_ = p_;
    if (p_ == 0) e.q_ = -q_;
    else e.r_ = r_ == 0 ? 0 : p_ - r_;
    return e;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return p_ == o.p_ && (p_ == 0 ? q_ == o.q_ : r_ == o.r_);
}

FieldElement FieldElement::normalized() const {
    FieldElement e = *this;
    if (p_ == 0) e.q_.canonicalize();
    else e.r_ %= p_;
    return e;
}

std::string FieldElement::str() const {
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_);
}

FieldElement field_inverse(const FieldElement& a, const FieldSpec& F) {
    if (a.characteristic() != F.characteristic())
        fail("FieldMismatch", "element does not belong to the given field");
    return a.inverse();
}

} // namespace nres
