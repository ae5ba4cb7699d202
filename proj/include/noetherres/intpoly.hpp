#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace nres {

/// Univariate integer-coefficient polynomial, sparse.
class IntPoly {
public:
    void add(std::uint64_t deg, long long coeff) {
        if (coeff == 0) return;
        auto [it, ins] = c_.emplace(deg, coeff);
        if (!ins) {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }
    long long coeff(std::uint64_t deg) const {
        auto it = c_.find(deg);
        return it == c_.end() ? 0 : it->second;
    }
    long long eval_one() const {
        long long s = 0;
        for (auto& [d, c] : c_) { (void)d; s += c; }
        return s;
    }
    const std::map<std::uint64_t, long long>& coeffs() const { return c_; }
    bool operator==(const IntPoly&) const = default;

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [d, c] : c_) {
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            long long a = c >= 0 ? c : -c;
            if (d == 0) os << a;
            else {
                if (a != 1) os << a << "*";
                os << var;
                if (d > 1) os << "^" << d;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<std::uint64_t, long long> c_;
};

/// Three-variable integer-coefficient polynomial keyed by (s1, s2, s3).
class MultiPoly3 {
public:
    using Key = std::array<std::uint64_t, 3>;

    void add(const Key& k, long long coeff) {
        if (coeff == 0) return;
        auto [it, ins] = c_.emplace(k, coeff);
        if (!ins) {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }
    long long coeff(const Key& k) const {
        auto it = c_.find(k);
        return it == c_.end() ? 0 : it->second;
    }
    long long eval_one() const {
        long long s = 0;
        for (auto& [k, c] : c_) { (void)k; s += c; }
        return s;
    }
    const std::map<Key, long long>& coeffs() const { return c_; }
    bool operator==(const MultiPoly3&) const = default;

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : c_) {
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            long long a = c >= 0 ? c : -c;
            std::string mono;
            for (std::size_t i = 0; i < 3; ++i) {
                if (k[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "t" + std::to_string(i + 1);
                if (k[i] > 1) mono += "^" + std::to_string(k[i]);
            }
            if (mono.empty()) os << a;
            else if (a == 1) os << mono;
            else os << a << "*" << mono;
            first = false;
        }
        return os.str();
    }

private:
    std::map<Key, long long> c_;
};

} // namespace nres
