#include "fdr/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fdr {

std::size_t rank(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    // Clear denominators row by row, then Bareiss on integers.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    Integer prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t p = rk;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rk]);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                a[r][k] = a[rk][c] * a[r][k] - a[r][c] * a[rk][k];
                mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rk][c];
        ++rk;
    }
    return rk;
}

ColumnEchelon::ColumnEchelon(const Matrix& columns)
    : reduced_(columns), transform_(columns.rows(), columns.rows()) {
    const std::size_t rows = columns.rows(), cols = columns.cols();
    for (std::size_t r = 0; r < rows; ++r) transform_(r, r) = 1;
    auto swap_rows = [](Matrix& m, std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
    };
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t p = rk;
        while (p < rows && reduced_(p, c) == 0) ++p;
        if (p == rows) continue;
        swap_rows(reduced_, p, rk);
        swap_rows(transform_, p, rk);
        const Rational inv = 1 / reduced_(rk, c);
        for (std::size_t k = 0; k < cols; ++k) reduced_(rk, k) *= inv;
        for (std::size_t k = 0; k < rows; ++k) transform_(rk, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rk || reduced_(r, c) == 0) continue;
            const Rational f = reduced_(r, c);
            for (std::size_t k = c; k < cols; ++k) reduced_(r, k) -= f * reduced_(rk, k);
            for (std::size_t k = 0; k < rows; ++k) transform_(r, k) -= f * transform_(rk, k);
        }
        pivot_cols_.push_back(c);
        ++rk;
    }
}

std::optional<std::vector<Rational>> ColumnEchelon::solve(const std::vector<Rational>& v) const {
    const std::size_t rows = transform_.rows();
    if (v.size() != rows) throw std::invalid_argument("right-hand side has wrong length");
    std::vector<Rational> w(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = 0; k < rows; ++k)
            if (v[k] != 0 && transform_(r, k) != 0) w[r] += transform_(r, k) * v[k];
    for (std::size_t r = rank(); r < rows; ++r)
        if (w[r] != 0) return std::nullopt;
    std::vector<Rational> x(reduced_.cols());
    for (std::size_t r = 0; r < rank(); ++r) x[pivot_cols_[r]] = w[r];
    return x;
}

}  // namespace fdr
