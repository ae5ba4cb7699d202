#include "oracles.hpp"

#include <map>

namespace oracles {

namespace {

bool member_rec(const std::vector<std::vector<std::uint32_t>>& cols,
                std::vector<std::int64_t>& target, std::size_t from,
                std::map<std::pair<std::vector<std::int64_t>, std::size_t>, bool>& memo) {
    bool zero = true;
    for (auto v : target)
        if (v != 0) { zero = false; break; }
    if (zero) return true;
    for (auto v : target)
        if (v < 0) return false;
    if (from >= cols.size()) return false;
    auto key = std::make_pair(target, from);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // either skip column `from` or subtract it once and retry
    bool ok = member_rec(cols, target, from + 1, memo);
    if (!ok) {
        for (std::size_t r = 0; r < cols[from].size(); ++r)
            target[r] -= static_cast<std::int64_t>(cols[from][r]);
        ok = member_rec(cols, target, from, memo);
        for (std::size_t r = 0; r < cols[from].size(); ++r)
            target[r] += static_cast<std::int64_t>(cols[from][r]);
    }
    memo.emplace(std::move(key), ok);
    return ok;
}

} // namespace

bool semigroup_member(const std::vector<std::vector<std::uint32_t>>& matrix,
                      const std::vector<std::int64_t>& target) {
    const std::size_t d = matrix.size();
    const std::size_t n = matrix.empty() ? 0 : matrix[0].size();
    std::vector<std::vector<std::uint32_t>> cols(n, std::vector<std::uint32_t>(d));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < d; ++r) cols[c][r] = matrix[r][c];
    std::vector<std::int64_t> t = target;
    std::map<std::pair<std::vector<std::int64_t>, std::size_t>, bool> memo;
    return member_rec(cols, t, 0, memo);
}

std::set<std::vector<std::uint64_t>> semigroup_upto(
    const std::vector<std::vector<std::uint32_t>>& matrix, std::uint64_t bound) {
    const std::size_t d = matrix.size();
    const std::size_t n = matrix.empty() ? 0 : matrix[0].size();
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<std::uint64_t>> frontier{std::vector<std::uint64_t>(d, 0)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint64_t>> next;
        for (const auto& p : frontier) {
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<std::uint64_t> q = p;
                std::uint64_t total = 0;
                for (std::size_t r = 0; r < d; ++r) {
                    q[r] += matrix[r][c];
                    total += q[r];
                }
                if (total > bound) continue;
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

std::uint64_t toric_hilbert(const std::vector<std::vector<std::uint32_t>>& matrix,
                            std::uint64_t s) {
    auto all = semigroup_upto(matrix, s);
    std::uint64_t count = 0;
    for (const auto& b : all) {
        std::uint64_t total = 0;
        for (auto v : b) total += v;
        if (total == s) ++count;
    }
    return count;
}

namespace {

void count_rec(const std::vector<Monomial>& in_I, const WeightVector& w, Monomial& cur,
               std::size_t var, std::int64_t remaining, std::uint64_t& count) {
    if (var == w.size()) {
        if (remaining != 0) return;
        for (const auto& g : in_I)
            if (divides(g, cur)) return;
        ++count;
        return;
    }
    for (std::int64_t e = 0; e * static_cast<std::int64_t>(w[var]) <= remaining; ++e) {
        cur[var] = static_cast<Exp>(e);
        count_rec(in_I, w, cur, var + 1, remaining - e * static_cast<std::int64_t>(w[var]),
                  count);
    }
    cur[var] = 0;
}

} // namespace

std::uint64_t standard_monomial_count(const std::vector<Monomial>& in_I, const WeightVector& w,
                                      std::uint64_t s) {
    Monomial cur(w.size());
    std::uint64_t count = 0;
    count_rec(in_I, w, cur, 0, static_cast<std::int64_t>(s), count);
    return count;
}

ToricPresentation random_presentation(std::mt19937_64& rng, std::size_t max_n,
                                      std::uint32_t max_entry) {
    std::uniform_int_distribution<std::size_t> npick(4, max_n);
    std::uniform_int_distribution<std::uint32_t> entry(0, max_entry);
    std::uniform_int_distribution<std::uint32_t> scale(1, max_entry);
    std::size_t n = npick(rng);
    std::vector<std::vector<std::uint32_t>> m(3, std::vector<std::uint32_t>(n, 0));
    for (std::size_t c = 0; c + 3 < n; ++c) {
        std::uint32_t a = 0, b = 0, d = 0;
        while (a + b + d == 0) { a = entry(rng); b = entry(rng); d = entry(rng); }
        m[0][c] = a; m[1][c] = b; m[2][c] = d;
    }
    for (std::size_t i = 0; i < 3; ++i) m[i][n - 3 + i] = scale(rng);
    return ToricPresentation::validate(m);
}

} // namespace oracles
