#include "noetherres/order.hpp"

namespace nres {

MonomialOrder MonomialOrder::weighted_degrevlex(WeightVector w) {
    MonomialOrder o;
    o.kind_ = Kind::DegRevLex;
    o.w_ = std::move(w);
    return o;
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    o.priority_ = std::move(priority);
    return o;
}

MonomialOrder MonomialOrder::block(std::size_t split, MonomialOrder first, MonomialOrder second) {
    MonomialOrder o;
    o.kind_ = Kind::Block;
    o.split_ = split;
    o.first_ = std::make_shared<MonomialOrder>(std::move(first));
    o.second_ = std::make_shared<MonomialOrder>(std::move(second));
    return o;
}

std::size_t MonomialOrder::nvars() const {
    switch (kind_) {
    case Kind::DegRevLex: return w_.size();
    case Kind::Lex: return priority_.size();
    case Kind::Block: return split_ + second_->nvars();
    }
    return 0;
}

const WeightVector& MonomialOrder::weights() const {
    if (kind_ != Kind::DegRevLex)
        fail("OrderKind", "weights only defined for weighted degrevlex orders");
    return w_;
}

Cmp MonomialOrder::compare_range(const Monomial& a, const Monomial& b,
                                 std::size_t lo, std::size_t hi) const {
    switch (kind_) {
    case Kind::DegRevLex: {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += static_cast<std::uint64_t>(a[i]) * w_[i - lo];
            db += static_cast<std::uint64_t>(b[i]) * w_[i - lo];
        }
        if (da != db) return da > db ? Cmp::Greater : Cmp::Less;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] < b[i] ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    }
    case Kind::Lex: {
        for (std::size_t k : priority_) {
            std::size_t i = lo + k;
            if (a[i] != b[i]) return a[i] > b[i] ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    }
    case Kind::Block: {
        Cmp c = first_->compare_range(a, b, lo, lo + split_);
        if (c != Cmp::Equal) return c;
        return second_->compare_range(a, b, lo + split_, hi);
    }
    }
    return Cmp::Equal;
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars() || a.nvars() != nvars())
        fail("LengthMismatch", "monomials do not match the order's variable count");
    return compare_range(a, b, 0, nvars());
}

Cmp MonomialOrder::compare_product(const Monomial& a1, const Monomial& m1,
                                   const Monomial& a2, const Monomial& m2) const {
    if (kind_ == Kind::DegRevLex) {
        std::size_t n = nvars();
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = 0; i < n; ++i) {
            da += (static_cast<std::uint64_t>(a1[i]) + m1[i]) * w_[i];
            db += (static_cast<std::uint64_t>(a2[i]) + m2[i]) * w_[i];
        }
        if (da != db) return da > db ? Cmp::Greater : Cmp::Less;
        for (std::size_t i = n; i-- > 0;) {
            std::uint64_t x = static_cast<std::uint64_t>(a1[i]) + m1[i];
            std::uint64_t y = static_cast<std::uint64_t>(a2[i]) + m2[i];
            if (x != y) return x < y ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    }
    return compare(mul(a1, m1), mul(a2, m2));
}

Cmp compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return ord.compare(a, b);
}

} // namespace nres
