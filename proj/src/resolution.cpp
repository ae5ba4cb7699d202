#include "noetherres/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace nres {

void PolyMatrix::erase_row(std::size_t r) {
    std::vector<Polynomial> b;
    b.reserve((rows_ - 1) * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < cols_; ++j) b.push_back(std::move(a_[i * cols_ + j]));
    }
    a_ = std::move(b);
    --rows_;
}

void PolyMatrix::erase_col(std::size_t c) {
    std::vector<Polynomial> b;
    b.reserve(rows_ * (cols_ - 1));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (j != c) b.push_back(std::move(a_[i * cols_ + j]));
    a_ = std::move(b);
    --cols_;
}

bool GradedFreeResolution::operator==(const GradedFreeResolution& o) const {
    if (nvars != o.nvars || dim != o.dim || !(weights == o.weights) ||
        !(field == o.field) || minimal != o.minimal || steps.size() != o.steps.size() ||
        diffs.size() != o.diffs.size())
        return false;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].labels != o.steps[i].labels || steps[i].shifts != o.steps[i].shifts ||
            steps[i].multidegrees != o.steps[i].multidegrees)
            return false;
    }
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i].rows() != o.diffs[i].rows() || diffs[i].cols() != o.diffs[i].cols())
            return false;
        for (std::size_t r = 0; r < diffs[i].rows(); ++r)
            for (std::size_t c = 0; c < diffs[i].cols(); ++c)
                if (diffs[i].at(r, c) != o.diffs[i].at(r, c)) return false;
    }
    return true;
}

namespace {

// nonzero constant entry, if any
std::optional<FieldElement> constant_of(const Polynomial& p) {
    if (p.size() == 1 && p.terms()[0].m.is_one()) return p.terms()[0].c;
    return std::nullopt;
}

struct Pivot {
    std::size_t level, row, col;
    FieldElement unit;
};

std::optional<Pivot> find_pivot(const GradedFreeResolution& res) {
    for (std::size_t i = 0; i < res.diffs.size(); ++i) {
        const PolyMatrix& m = res.diffs[i];
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (auto u = constant_of(m.at(r, c))) return Pivot{i, r, c, *u};
    }
    return std::nullopt;
}

void erase_step_entry(ResolutionStep& s, std::size_t k) {
    s.labels.erase(s.labels.begin() + static_cast<std::ptrdiff_t>(k));
    s.shifts.erase(s.shifts.begin() + static_cast<std::ptrdiff_t>(k));
    if (!s.multidegrees.empty())
        s.multidegrees.erase(s.multidegrees.begin() + static_cast<std::ptrdiff_t>(k));
}

} // namespace

GradedFreeResolution minimalize(const GradedFreeResolution& input) {
    GradedFreeResolution res = input;
    MonomialOrder ord = MonomialOrder::weighted_degrevlex(res.weights);

    while (auto piv = find_pivot(res)) {
        std::size_t i = piv->level, r = piv->row, c = piv->col;
        if (i == 0)
            fail("InternalError", "unit entry against the minimal generator step");
        PolyMatrix& m = res.diffs[i];
        FieldElement uinv = piv->unit.inverse();

        // rank-one update: m[r'][c'] -= m[r'][c] * m[r][c'] / u
        for (std::size_t rr = 0; rr < m.rows(); ++rr) {
            if (rr == r || m.at(rr, c).is_zero()) continue;
            Polynomial factor = mul_term(m.at(rr, c), uinv, Monomial(res.nvars));
            for (std::size_t cc = 0; cc < m.cols(); ++cc) {
                if (cc == c || m.at(r, cc).is_zero()) continue;
                m.at(rr, cc) = sub(m.at(rr, cc), mul(factor, m.at(r, cc), ord), ord);
            }
        }
        m.erase_row(r);
        m.erase_col(c);
        if (i + 1 < res.diffs.size()) res.diffs[i + 1].erase_row(c);
        res.diffs[i - 1].erase_col(r); // i >= 1 here
        erase_step_entry(res.steps[i], r);
        erase_step_entry(res.steps[i + 1], c);

        // drop trailing zero-rank steps
        while (!res.steps.empty() && res.steps.back().labels.empty()) {
            res.steps.pop_back();
            res.diffs.pop_back();
        }
    }
    res.minimal = true;
    return res;
}

bool resolution_is_exact_complex(const GradedFreeResolution& res) {
    MonomialOrder ord = MonomialOrder::weighted_degrevlex(res.weights);
    for (std::size_t i = 0; i + 1 < res.diffs.size(); ++i) {
        const PolyMatrix& a = res.diffs[i];
        const PolyMatrix& b = res.diffs[i + 1];
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                Polynomial acc = Polynomial::zero(res.nvars, res.field);
                for (std::size_t k = 0; k < a.cols(); ++k) {
                    if (a.at(r, k).is_zero() || b.at(k, c).is_zero()) continue;
                    acc = add(acc, mul(a.at(r, k), b.at(k, c), ord), ord);
                }
                if (!acc.is_zero()) return false;
            }
        }
    }
    return true;
}

bool resolution_is_homogeneous(const GradedFreeResolution& res) {
    for (std::size_t i = 0; i < res.diffs.size(); ++i) {
        const PolyMatrix& m = res.diffs[i];
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                const Polynomial& p = m.at(r, c);
                if (p.is_zero()) continue;
                auto deg = p.homogeneous_degree(res.weights);
                if (!deg) return false;
                std::uint64_t colshift = res.steps[i + 1].shifts[c];
                std::uint64_t rowshift = res.steps[i].shifts[r];
                if (colshift < rowshift || *deg != colshift - rowshift) return false;
            }
        }
    }
    return true;
}

BettiTable betti_from_shifts(const std::vector<std::vector<std::uint64_t>>& step_shifts,
                             std::uint32_t scale, bool minimal) {
    if (scale == 0) scale = 1;
    BettiTable t;
    t.columns = step_shifts.size();
    t.minimal = minimal;
    t.scale = scale;
    t.totals.assign(t.columns, 0);
    for (std::size_t i = 0; i < step_shifts.size(); ++i) {
        for (std::uint64_t s : step_shifts[i]) {
            if (s % scale != 0)
                fail("NotStandardGraded", "shift " + std::to_string(s) +
                                              " is not divisible by the grading scale " +
                                              std::to_string(scale));
            std::int64_t r = static_cast<std::int64_t>(s / scale) - static_cast<std::int64_t>(i);
            ++t.entries[{r, i}];
            ++t.totals[i];
        }
    }
    return t;
}

BettiTable betti_table(const GradedFreeResolution& res, std::uint32_t scale) {
    std::vector<std::vector<std::uint64_t>> shifts;
    shifts.reserve(res.steps.size());
    for (const auto& s : res.steps) shifts.push_back(s.shifts);
    return betti_from_shifts(shifts, scale, res.minimal);
}

std::string betti_ascii(const BettiTable& t) {
    constexpr int W = 6;
    auto cell = [&](const std::string& s) {
        std::string pad(static_cast<std::size_t>(W) - std::min<std::size_t>(s.size(), W), ' ');
        return pad + s;
    };
    std::int64_t rmin = 0, rmax = 0;
    for (const auto& [key, cnt] : t.entries) {
        (void)cnt;
        rmin = std::min(rmin, key.first);
        rmax = std::max(rmax, key.first);
    }
    std::ostringstream os;
    std::string head = cell("");
    for (std::size_t i = 0; i < t.columns; ++i) head += cell(std::to_string(i));
    os << head << "\n";
    os << std::string(static_cast<std::size_t>(W) * (t.columns + 1), '-') << "\n";
    for (std::int64_t r = rmin; r <= rmax; ++r) {
        os << cell(std::to_string(r) + ":");
        for (std::size_t i = 0; i < t.columns; ++i) {
            auto it = t.entries.find({r, i});
            os << cell(it == t.entries.end() ? "-" : std::to_string(it->second));
        }
        os << "\n";
    }
    os << std::string(static_cast<std::size_t>(W) * (t.columns + 1), '-') << "\n";
    os << "total:";
    for (std::size_t i = 0; i < t.columns; ++i) os << cell(std::to_string(t.totals[i]));
    os << "\n";
    return os.str();
}

} // namespace nres
