#include "toric/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows, size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<IntVec>& rows, size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = Rat(rows[i][j]);
    }
    return m;
}

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatVec RatMatrix::row(size_t i) const {
    RatVec out(cols_);
    for (size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

RatMatrix RatMatrix::vstack(const RatMatrix& top, const RatMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
    RatMatrix m(top.rows() + bottom.rows(), top.cols());
    for (size_t i = 0; i < top.rows(); ++i)
        for (size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
    for (size_t i = 0; i < bottom.rows(); ++i)
        for (size_t j = 0; j < bottom.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

std::vector<size_t> RatMatrix::reduce() {
    std::vector<size_t> pivots;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        size_t sel = pivot_row;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(pivot_row, j));
        const Rat inv = Rat(1) / at(pivot_row, col);
        for (size_t j = col; j < cols_; ++j) at(pivot_row, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row || at(i, col) == 0) continue;
            const Rat factor = at(i, col);
            for (size_t j = col; j < cols_; ++j) at(i, j) -= factor * at(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

size_t RatMatrix::rank() const {
    RatMatrix copy = *this;
    return copy.reduce().size();
}

std::vector<RatVec> RatMatrix::row_basis() const {
    RatMatrix copy = *this;
    const auto pivots = copy.reduce();
    std::vector<RatVec> out;
    out.reserve(pivots.size());
    for (size_t i = 0; i < pivots.size(); ++i) out.push_back(copy.row(i));
    return out;
}

std::vector<RatVec> RatMatrix::nullspace() const {
    RatMatrix copy = *this;
    const auto pivots = copy.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<RatVec> out;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(cols_);
        v[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -copy.at(i, free_col);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<RatVec> solve_unique(const RatMatrix& a, const RatVec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve dimension mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const auto pivots = aug.reduce();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    if (pivots.size() < a.cols()) return std::nullopt;                      // underdetermined
    RatVec x(a.cols());
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

RatMatrix span_intersection(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("span_intersection column mismatch");
    const size_t n = a.cols();
    // Zassenhaus block matrix [[A A],[B 0]]: after reduction, rows with zero
    // left half carry an intersection basis in the right half.
    RatMatrix block(a.rows() + b.rows(), 2 * n);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.at(i, j);
            block.at(i, n + j) = a.at(i, j);
        }
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < n; ++j) block.at(a.rows() + i, j) = b.at(i, j);
    block.reduce();
    std::vector<RatVec> rows;
    for (size_t i = 0; i < block.rows(); ++i) {
        bool left_zero = true, right_zero = true;
        for (size_t j = 0; j < n && left_zero; ++j)
            if (block.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        RatVec v(n);
        for (size_t j = 0; j < n; ++j) {
            v[j] = block.at(i, n + j);
            if (v[j] != 0) right_zero = false;
        }
        if (!right_zero) rows.push_back(std::move(v));
    }
    RatMatrix out = RatMatrix::from_rows(rows, n);
    out.reduce();
    return RatMatrix::from_rows(out.row_basis(), n);
}

bool in_rowspan(const RatMatrix& m, const RatVec& v) {
    RatMatrix stacked = RatMatrix::vstack(m, RatMatrix::from_rows({v}, m.cols()));
    return stacked.rank() == m.rank();
}

}  // namespace toric
