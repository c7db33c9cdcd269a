#include <doctest.h>

#include <random>

#include "fdr/basisops.hpp"
#include "fdr/linalg.hpp"
#include "fdr/quotient.hpp"

using namespace fdr;

namespace {

std::uint64_t binom(int m, int k) {
    if (k < 0 || k > m) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(m - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Plain rational Gaussian elimination, independent of the Bareiss path.
std::size_t naive_rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("rank agrees with naive elimination") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> v(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(v(rng), 1 + static_cast<int>(rng() % 3));
        // Force a dependency now and then.
        if (rows > 2 && trial % 3 == 0)
            for (std::size_t j = 0; j < cols; ++j) m(2, j) = m(0, j) * Rational(2) - m(1, j);
        CHECK(rank(m) == naive_rank(m));
    }
    CHECK(rank(Matrix(3, 4)) == 0);
    CHECK(rank(Matrix()) == 0);
}

TEST_CASE("column echelon solves in the column basis") {
    Matrix a(3, 3);
    a(0, 0) = 1, a(1, 0) = 2, a(2, 0) = 0;
    a(0, 1) = 0, a(1, 1) = 1, a(2, 1) = 1;
    a(0, 2) = 1, a(1, 2) = 3, a(2, 2) = 1;  // col0 + col1
    const ColumnEchelon e(a);
    CHECK(e.rank() == 2);
    const auto x = e.solve({Rational(2), Rational(7), Rational(3)});
    REQUIRE(x.has_value());
    std::vector<Rational> back(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) back[i] += a(i, j) * (*x)[j];
    CHECK(back == std::vector<Rational>{2, 7, 3});
    CHECK_FALSE(e.solve({Rational(1), Rational(0), Rational(0)}).has_value());
}

TEST_CASE("basis verification") {
    const std::uint64_t expected[] = {0, 0, 3, 10, 35, 126, 462};
    for (int n = 2; n <= 6; ++n) {
        const auto rep = verify_basis(n);
        CHECK(rep.ok());
        CHECK(rep.phi_count == expected[n]);
        CHECK(rep.quotient_dim == expected[n]);
        CHECK(rep.monomial_count == std::uint64_t{1} << (2 * (n - 1)));
        CHECK(rep.monomial_count - rep.ideal_rank == rep.quotient_dim);
    }
}

TEST_CASE("bidegree dimensions") {
    for (int n = 2; n <= 7; ++n) {
        const auto dims = fdr_dimensions(n);
        std::uint64_t total = 0;
        for (const auto& [ij, d] : dims) {
            total += d;
            if (d) CHECK(ij.first + ij.second <= n - 1);
            CHECK(dims.at({ij.second, ij.first}) == d);
        }
        CHECK(total == binom(2 * n - 1, n));
        for (int k = 1; k <= n; ++k) CHECK(dims.at({n - k, k - 1}) == binom(n, k) * binom(n, k - 1) / static_cast<std::uint64_t>(n));
        // Blocked ranks agree with one unblocked matrix per bidegree.
        if (n <= 5)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(binom(n - 1, i) * binom(n - 1, j) - ideal_slice_rank_unblocked(n, i, j) == dims.at({i, j}));
    }
}

TEST_CASE("basis elements are orthogonal to the ideal") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& pi : enumerate(n)) {
            const auto& g = g_pi(pi);
            const Monomial lead = g.terms().begin()->first;
            for (const auto& d : ideal_slice(n, lead.theta_degree(), lead.xi_degree())) CHECK(inner_product(g, d) == 0);
        }
}

TEST_CASE("each G_pi lies in one block and has the predicted leading monomial") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& pi : enumerate(n)) {
            const auto& g = g_pi(pi);
            const BlockKey key = block_of(pi);
            for (const auto& [m, c] : g.terms()) CHECK(block_of(m) == key);
            Monomial expected{};
            for (auto [i, j] : pi.pairs()) expected = Monomial(expected.theta() | (1u << (i - 1)), expected.xi() | (1u << (i - 1)));
            for (auto [i, label] : pi.singletons())
                expected = label == Family::Theta ? Monomial(expected.theta() | (1u << (i - 1)), expected.xi())
                                                  : Monomial(expected.theta(), expected.xi() | (1u << (i - 1)));
            CHECK(leading_monomial(g) == expected);
        }
}

TEST_CASE("reduction to the basis") {
    const int n = 5;
    for (const auto& pi : enumerate(n)) {
        const auto c = reduce_to_basis(g_pi(pi) * Rational(3));
        REQUIRE(c.coords.size() == 1);
        CHECK(c.coords.begin()->first == pi);
        CHECK(c.coords.begin()->second == 3);
    }
    const auto d = Multivector::diagonal(n);
    CHECK(reduce_to_basis(wedge(d, Multivector::parse(n, "+1 t1 x3 -2 t2"))).coords.empty());
    CHECK(reduce_to_basis(Multivector(n)).coords.empty());
    const auto f = Multivector::parse(n, "+1 t1 t2 x3 +1/2 t4 x4 t1");
    const auto coords = reduce_to_basis(f);
    Multivector back(n);
    for (const auto& [pi, c] : coords.coords) back += g_pi(pi) * c;
    // Independent membership test: f - back lies in the span of the (2,1) ideal slice.
    const auto slice = ideal_slice(n, 2, 1);
    std::vector<Multivector> cols(slice.begin(), slice.end());
    std::map<Monomial, std::size_t> row_of;
    auto build = [&](const std::vector<Multivector>& cs) {
        for (const auto& c : cs)
            for (const auto& [m, v] : c.terms()) row_of.try_emplace(m, row_of.size());
        Matrix a(row_of.size(), cs.size());
        for (std::size_t j = 0; j < cs.size(); ++j)
            for (const auto& [m, v] : cs[j].terms()) a(row_of.at(m), j) = v;
        return a;
    };
    cols.push_back(f - back);
    const Matrix with = build(cols);
    cols.pop_back();
    Matrix without(with.rows(), cols.size());
    for (std::size_t i = 0; i < with.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) without(i, j) = with(i, j);
    CHECK(rank(with) == rank(without));
    CHECK_FALSE((f - back).is_zero());
}

TEST_CASE("D acts injectively below the anti-diagonal and kills it") {
    for (int n = 2; n <= 6; ++n) {
        const auto rep = injectivity_check(n);
        const auto dims = fdr_dimensions(n);
        for (const auto& cell : rep.cells) {
            CHECK(cell.lambda_injective_where_needed);
            CHECK(cell.source_dim == dims.at({cell.i, cell.j}));
            if (cell.i + cell.j < n - 1)
                CHECK(cell.kernel_dim() == 0);
            else
                CHECK(cell.image_rank == 0);
        }
    }
}
