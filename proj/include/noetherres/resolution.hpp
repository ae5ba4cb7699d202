#pragma once

#include <map>
#include <optional>
#include <string>

#include "noetherres/module.hpp"

namespace nres {

/// Dense matrix of polynomials, row-major. Rows index the target free
/// module's basis, columns the source's.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars, FieldSpec field)
        : rows_(rows), cols_(cols),
          a_(rows * cols, Polynomial::zero(nvars, field)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Polynomial& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    void erase_row(std::size_t r);
    void erase_col(std::size_t c);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> a_;
};

struct ResolutionStep {
    std::vector<Monomial> labels;                          // monomials B_i
    std::vector<std::uint64_t> shifts;                     // omega-degrees
    std::vector<std::vector<std::uint64_t>> multidegrees;  // toric only; may be empty
};

/// Graded free resolution of R/I as a module over A = k[x_{n-d+1},...,x_n]:
/// steps[0] is the generator step, diffs[i] the map from step i+1 to step i.
struct GradedFreeResolution {
    std::size_t nvars = 0;
    std::size_t dim = 0; // d
    WeightVector weights;
    FieldSpec field;
    std::vector<ResolutionStep> steps;
    std::vector<PolyMatrix> diffs;
    bool minimal = false;

    std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
    bool operator==(const GradedFreeResolution& o) const;
};

/// Repeated unit-pivot elimination: cancel a nonzero-constant entry of a
/// differential, update the two neighbouring maps, iterate to fixpoint.
GradedFreeResolution minimalize(const GradedFreeResolution& res);

/// psi_i . psi_{i+1} = 0 for all consecutive differentials, checked exactly.
bool resolution_is_exact_complex(const GradedFreeResolution& res);

/// Every nonzero entry is omega-homogeneous of degree column shift - row shift.
bool resolution_is_homogeneous(const GradedFreeResolution& res);

struct BettiTable {
    std::size_t columns = 0;
    std::map<std::pair<std::int64_t, std::size_t>, std::uint64_t> entries; // (row, col) -> count
    std::vector<std::uint64_t> totals;
    bool minimal = true;
    std::uint32_t scale = 1; // shifts are divided by this before row = s - i
};

/// Betti table at the given scale: entry(r, i) counts shifts s at step i
/// with s/scale = r + i.
BettiTable betti_from_shifts(const std::vector<std::vector<std::uint64_t>>& step_shifts,
                             std::uint32_t scale, bool minimal);
BettiTable betti_table(const GradedFreeResolution& res, std::uint32_t scale);

/// ASCII layout: header of column indices, dash rule, one row per degree
/// with 6-wide right-aligned counts and '-' for zero, dash rule, totals.
std::string betti_ascii(const BettiTable& t);

} // namespace nres
