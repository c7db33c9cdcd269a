#pragma once

// Exact dense elimination over Q for the small blocks that arise here.

#include <cstddef>
#include <optional>
#include <vector>

#include "fdr/exterior.hpp"

namespace fdr {

/// Row-major dense rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination on the integer-scaled matrix.
std::size_t rank(const Matrix& m);

/// Reduced row echelon form of the columns; used to express vectors in a column basis.
class ColumnEchelon {
public:
    ColumnEchelon() = default;
    /// Factorizes the column space of `columns` (rows x cols).
    explicit ColumnEchelon(const Matrix& columns);

    std::size_t rank() const { return pivot_cols_.size(); }
    /// Pivot column indices in increasing order (a maximal independent subset).
    const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }

    /// Coefficients x with columns * x = v, using only pivot columns (others 0).
    /// Empty when v is outside the column space.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& v) const;

private:
    Matrix reduced_;                   ///< T * columns, in reduced row echelon form
    Matrix transform_;                 ///< invertible T
    std::vector<std::size_t> pivot_cols_;
};

}  // namespace fdr
