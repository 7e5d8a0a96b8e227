#pragma once

#include <optional>
#include <vector>

#include "toric/vec.hpp"

namespace toric {

/**
 * Dense matrix of exact rationals. Row reduction, rank and span arithmetic
 * are all performed over Q; reduced row echelon form is the canonical
 * representative used for deterministic output.
 */
class RatMatrix {
public:
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<RatVec>& rows, size_t cols);
    static RatMatrix from_int_rows(const std::vector<IntVec>& rows, size_t cols);
    static RatMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    RatVec row(size_t i) const;
    RatMatrix transposed() const;
    static RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);

    /// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
    std::vector<size_t> reduce();

    size_t rank() const;

    /// Nonzero rows of the reduced row echelon form (canonical row-span basis).
    std::vector<RatVec> row_basis() const;

    /// Canonical basis of {x : M x = 0}, one vector per free column.
    std::vector<RatVec> nullspace() const;

    bool operator==(const RatMatrix& other) const = default;

private:
    size_t rows_, cols_;
    std::vector<Rat> data_;
};

/// Exact solution of A x = b (A square or overdetermined); nullopt when the
/// system is inconsistent or the solution is not unique.
std::optional<RatVec> solve_unique(const RatMatrix& a, const RatVec& b);

/// Canonical (RREF) basis of rowspan(a) ∩ rowspan(b). Columns must agree.
RatMatrix span_intersection(const RatMatrix& a, const RatMatrix& b);

/// True when v lies in the row span of m.
bool in_rowspan(const RatMatrix& m, const RatVec& v);

}  // namespace toric
