#ifndef GSTAR_MATRIX_HPP
#define GSTAR_MATRIX_HPP

#include "gstar/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gstar {

using RationalVector = std::vector<Rational>;

// Dense exact-rational matrix. Row-major, immutable in spirit: the
// elimination routines work on private copies.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    RationalVector row(int r) const;
    RationalMatrix transposed() const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RationalMatrix rref;
    std::vector<int> pivot_cols; // strictly increasing
};

// Reduced row-echelon form with the deterministic pivot rule: in each
// column, the first row (top to bottom) with a nonzero entry is the pivot.
RrefResult rref_with_pivots(const RationalMatrix& m);

int rank(const RationalMatrix& m);

// Basis of the right null space, one vector per non-pivot column, in
// ascending column order. Size is always cols - rank.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Coefficients c with sum_i c_i * basis_row_i = target, or nullopt when the
// target is not in the row span. Dependent basis rows get coefficient 0.
std::optional<RationalVector> solve_in_span(const RationalMatrix& basis_rows,
                                            const RationalVector& target);

// Incremental row-space rank. Rows are reduced against the stored basis;
// independent rows are normalized and kept. Deterministic.
class RankTracker {
public:
    explicit RankTracker(int width) : width_(width) {}

    // True when the row was independent of everything seen so far.
    bool add_row(RationalVector row);
    int rank() const { return static_cast<int>(basis_.size()); }
    int width() const { return width_; }

    // Remaining reduction of an arbitrary vector against the current basis.
    RationalVector reduce(RationalVector row) const;
    bool in_span(const RationalVector& row) const;

private:
    struct BasisRow {
        int lead;
        RationalVector v; // v[lead] == 1
    };
    int width_;
    std::vector<BasisRow> basis_; // sorted by lead column
};

// Repeated exact solves against a fixed set of independent rows.
class SpanSolver {
public:
    explicit SpanSolver(const std::vector<RationalVector>& independent_rows);

    // Coefficients w.r.t. the original rows, or nullopt if not in the span.
    std::optional<RationalVector> solve(const RationalVector& target) const;

private:
    int width_ = 0;
    std::vector<RationalVector> reduced_;   // rref'd rows
    std::vector<RationalVector> transform_; // reduced_[i] = sum transform_[i][j] * row_j
    std::vector<int> pivots_;
};

} // namespace gstar

#endif
