#include "gstar/matrix.hpp"

#include "gstar/errors.hpp"

namespace gstar {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return RationalMatrix(0, 0);
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols())
            throw InvalidArgument("from_rows: ragged row lengths");
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RationalVector RationalMatrix::row(int r) const {
    RationalVector out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RrefResult rref_with_pivots(const RationalMatrix& m) {
    RrefResult res{m, {}};
    RationalMatrix& a = res.rref;
    int next_row = 0;
    for (int col = 0; col < a.cols() && next_row < a.rows(); ++col) {
        int pivot = -1;
        for (int r = next_row; r < a.rows(); ++r) {
            if (!is_zero(a.at(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != next_row)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(next_row, c));
        Rational inv = 1 / a.at(next_row, col);
        for (int c = col; c < a.cols(); ++c) a.at(next_row, c) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == next_row || is_zero(a.at(r, col))) continue;
            Rational f = a.at(r, col);
            for (int c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(next_row, c);
        }
        res.pivot_cols.push_back(col);
        ++next_row;
    }
    return res;
}

int rank(const RationalMatrix& m) {
    RankTracker tracker(m.cols());
    for (int r = 0; r < m.rows(); ++r) tracker.add_row(m.row(r));
    return tracker.rank();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    RrefResult res = rref_with_pivots(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : res.pivot_cols) is_pivot[p] = true;

    std::vector<RationalVector> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < res.pivot_cols.size(); ++i)
            v[res.pivot_cols[i]] = -res.rref.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve_in_span(const RationalMatrix& basis_rows,
                                            const RationalVector& target) {
    if (static_cast<int>(target.size()) != basis_rows.cols())
        throw InvalidArgument("solve_in_span: target width mismatch");
    // Columns of the system are the basis rows; augment with the target.
    int k = basis_rows.rows();
    int m = basis_rows.cols();
    RationalMatrix aug(m, k + 1);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < k; ++c) aug.at(r, c) = basis_rows.at(c, r);
        aug.at(r, k) = target[r];
    }
    RrefResult res = rref_with_pivots(aug);
    for (int p : res.pivot_cols)
        if (p == k) return std::nullopt; // inconsistent
    RationalVector coeff(k);
    for (std::size_t i = 0; i < res.pivot_cols.size(); ++i)
        coeff[res.pivot_cols[i]] = res.rref.at(static_cast<int>(i), k);
    return coeff;
}

bool RankTracker::add_row(RationalVector row) {
    if (static_cast<int>(row.size()) != width_)
        throw InvalidArgument("RankTracker: row width mismatch");
    for (const BasisRow& b : basis_) {
        if (is_zero(row[b.lead])) continue;
        Rational f = row[b.lead];
        for (int c = b.lead; c < width_; ++c)
            if (!is_zero(b.v[c])) row[c] -= f * b.v[c];
    }
    int lead = -1;
    for (int c = 0; c < width_; ++c) {
        if (!is_zero(row[c])) {
            lead = c;
            break;
        }
    }
    if (lead < 0) return false;
    Rational inv = 1 / row[lead];
    for (int c = lead; c < width_; ++c) row[c] *= inv;
    auto pos = basis_.begin();
    while (pos != basis_.end() && pos->lead < lead) ++pos;
    basis_.insert(pos, BasisRow{lead, std::move(row)});
    return true;
}

RationalVector RankTracker::reduce(RationalVector row) const {
    for (const BasisRow& b : basis_) {
        if (is_zero(row[b.lead])) continue;
        Rational f = row[b.lead];
        for (int c = b.lead; c < width_; ++c)
            if (!is_zero(b.v[c])) row[c] -= f * b.v[c];
    }
    return row;
}

bool RankTracker::in_span(const RationalVector& row) const {
    RationalVector r = reduce(row);
    for (const Rational& q : r)
        if (!is_zero(q)) return false;
    return true;
}

SpanSolver::SpanSolver(const std::vector<RationalVector>& independent_rows) {
    int k = static_cast<int>(independent_rows.size());
    width_ = k == 0 ? 0 : static_cast<int>(independent_rows[0].size());
    reduced_ = independent_rows;
    transform_.assign(k, RationalVector(k));
    for (int i = 0; i < k; ++i) transform_[i][i] = 1;

    int next = 0;
    for (int col = 0; col < width_ && next < k; ++col) {
        int pivot = -1;
        for (int r = next; r < k; ++r) {
            if (!is_zero(reduced_[r][col])) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(reduced_[pivot], reduced_[next]);
        std::swap(transform_[pivot], transform_[next]);
        Rational inv = 1 / reduced_[next][col];
        for (auto& q : reduced_[next]) q *= inv;
        for (auto& q : transform_[next]) q *= inv;
        for (int r = 0; r < k; ++r) {
            if (r == next || is_zero(reduced_[r][col])) continue;
            Rational f = reduced_[r][col];
            for (int c = 0; c < width_; ++c) reduced_[r][c] -= f * reduced_[next][c];
            for (int c = 0; c < k; ++c) transform_[r][c] -= f * transform_[next][c];
        }
        pivots_.push_back(col);
        ++next;
    }
    if (next != k) throw InvalidArgument("SpanSolver: rows are not independent");
}

std::optional<RationalVector> SpanSolver::solve(const RationalVector& target) const {
    if (static_cast<int>(target.size()) != width_)
        throw InvalidArgument("SpanSolver: target width mismatch");
    RationalVector residual = target;
    int k = static_cast<int>(reduced_.size());
    RationalVector alpha(k);
    for (int i = 0; i < k; ++i) {
        Rational f = residual[pivots_[i]];
        alpha[i] = f;
        if (is_zero(f)) continue;
        for (int c = 0; c < width_; ++c)
            if (!is_zero(reduced_[i][c])) residual[c] -= f * reduced_[i][c];
    }
    for (const Rational& q : residual)
        if (!is_zero(q)) return std::nullopt;
    RationalVector coeff(k);
    for (int i = 0; i < k; ++i) {
        if (is_zero(alpha[i])) continue;
        for (int j = 0; j < k; ++j) coeff[j] += alpha[i] * transform_[i][j];
    }
    return coeff;
}

} // namespace gstar
