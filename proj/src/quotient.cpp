#include "fdr/quotient.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <tuple>

namespace fdr {
namespace {

std::uint32_t full_mask(int n) { return (std::uint32_t{1} << (n - 1)) - 1; }

std::uint32_t free_set(int n, const BlockKey& key) { return full_mask(n) & ~(key.theta_only | key.xi_only); }

std::uint64_t binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    return r;
}

void check_n(int n) {
    if (n < 2 || n > kMaxN) throw std::out_of_range("n outside supported range");
}

/// Coordinates of f on the given row monomials; throws if f leaves the rows.
std::vector<Rational> coordinates(const Multivector& f, const std::vector<Monomial>& rows,
                                  const std::map<Monomial, std::size_t>& index) {
    std::vector<Rational> v(rows.size());
    for (const auto& [m, c] : f.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw ReductionFailure("element leaves its block");
        v[it->second] = c;
    }
    return v;
}

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& rows) {
    std::map<Monomial, std::size_t> idx;
    for (std::size_t r = 0; r < rows.size(); ++r) idx.emplace(rows[r], r);
    return idx;
}

Matrix columns_matrix(const std::vector<Multivector>& cols, const std::vector<Monomial>& rows) {
    const auto idx = index_of(rows);
    Matrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto v = coordinates(cols[c], rows, idx);
        for (std::size_t r = 0; r < rows.size(); ++r) m(r, c) = v[r];
    }
    return m;
}

std::vector<Multivector> ideal_generators(int n, const BlockKey& key) {
    std::vector<Multivector> out;
    if (key.d == 0) return out;
    const Multivector d = Multivector::diagonal(n);
    for (Monomial m : block_monomials(n, {key.theta_only, key.xi_only, key.d - 1}))
        out.push_back(wedge(d, Multivector(n, m)));
    return out;
}

template <class Key, class Value>
class WriteOnceCache {
public:
    template <class Make>
    const Value& get(const Key& key, Make make) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(key); it != map_.end()) return *it->second;
        }
        auto value = std::make_unique<Value>(make());
        std::unique_lock lock(mutex_);
        return *map_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::unique_ptr<Value>> map_;
};

}  // namespace

BlockKey block_of(Monomial m) {
    const std::uint32_t both = m.theta() & m.xi();
    return {m.theta() & ~both, m.xi() & ~both, std::popcount(both)};
}

BlockKey block_of(const LabeledPartition& pi) {
    BlockKey key;
    for (auto [i, label] : pi.singletons())
        (label == Family::Theta ? key.theta_only : key.xi_only) |= std::uint32_t{1} << (i - 1);
    key.d = static_cast<int>(pi.pairs().size());
    return key;
}

std::vector<Monomial> block_monomials(int n, const BlockKey& key) {
    check_n(n);
    std::vector<Monomial> out;
    const std::uint32_t r = free_set(n, key);
    if (key.d < 0 || key.d > std::popcount(r)) return out;
    // Enumerate subsets of r with d bits.
    for (std::uint32_t p = r;; p = (p - 1) & r) {
        if (std::popcount(p) == key.d) out.emplace_back(key.theta_only | p, key.xi_only | p);
        if (p == 0) break;
    }
    std::sort(out.begin(), out.end(), [](Monomial a, Monomial b) { return lex_greater(a, b); });
    return out;
}

std::size_t block_ideal_rank(int n, const BlockKey& key) {
    if (key.d == 0) return 0;
    return rank(columns_matrix(ideal_generators(n, key), block_monomials(n, key)));
}

const std::map<BlockKey, std::vector<LabeledPartition>>& phi_by_block(int n) {
    static WriteOnceCache<int, std::map<BlockKey, std::vector<LabeledPartition>>> cache;
    return cache.get(n, [n] {
        std::map<BlockKey, std::vector<LabeledPartition>> out;
        for (auto& pi : enumerate(n)) out[block_of(pi)].push_back(pi);
        return out;
    });
}

const BlockFactor& block_factor(int n, const BlockKey& key) {
    static WriteOnceCache<std::tuple<int, std::uint32_t, std::uint32_t, int>, BlockFactor> cache;
    return cache.get({n, key.theta_only, key.xi_only, key.d}, [&] {
        BlockFactor f;
        f.key = key;
        f.rows = block_monomials(n, key);
        const auto& groups = phi_by_block(n);
        if (auto it = groups.find(key); it != groups.end()) f.basis = it->second;
        std::vector<Multivector> cols;
        for (const auto& pi : f.basis) cols.push_back(g_pi(pi));
        auto ideal = ideal_generators(n, key);
        f.ideal_generators = ideal.size();
        f.ideal_rank = rank(columns_matrix(ideal, f.rows));
        cols.insert(cols.end(), ideal.begin(), ideal.end());
        f.echelon = ColumnEchelon(columns_matrix(cols, f.rows));
        f.combined_rank = f.echelon.rank();
        return f;
    });
}

std::vector<Multivector> ideal_slice(int n, int i, int j) {
    check_n(n);
    std::vector<Multivector> out;
    if (i < 1 || j < 1) return out;
    const Multivector d = Multivector::diagonal(n);
    const std::uint32_t mask = full_mask(n);
    for (std::uint32_t s = 0; s <= mask; ++s) {
        if (std::popcount(s) != i - 1) continue;
        for (std::uint32_t t = 0; t <= mask; ++t)
            if (std::popcount(t) == j - 1) out.push_back(wedge(d, Multivector(n, Monomial(s, t))));
    }
    return out;
}

std::size_t ideal_slice_rank_unblocked(int n, int i, int j) {
    const auto slice = ideal_slice(n, i, j);
    if (slice.empty()) return 0;
    std::vector<Monomial> rows;
    const std::uint32_t mask = full_mask(n);
    for (std::uint32_t s = 0; s <= mask; ++s) {
        if (std::popcount(s) != i) continue;
        for (std::uint32_t t = 0; t <= mask; ++t)
            if (std::popcount(t) == j) rows.emplace_back(s, t);
    }
    return rank(columns_matrix(slice, rows));
}

BasisCoords reduce_to_basis(const Multivector& f) {
    const int n = f.n();
    std::map<BlockKey, Multivector> parts;
    for (const auto& [m, c] : f.terms()) parts.try_emplace(block_of(m), n).first->second.add_term(m, c);
    BasisCoords out{n, {}};
    for (const auto& [key, part] : parts) {
        const BlockFactor& bf = block_factor(n, key);
        const auto v = coordinates(part, bf.rows, index_of(bf.rows));
        const auto x = bf.echelon.solve(v);
        if (!x) throw ReductionFailure("element not in span of basis and ideal");
        for (std::size_t c = 0; c < bf.basis.size(); ++c)
            if ((*x)[c] != 0) out.coords.emplace(bf.basis[c], (*x)[c]);
    }
    return out;
}

BidegreeTable fdr_dimensions(int n) {
    check_n(n);
    BidegreeTable table;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[{i, j}] = 0;
    const std::uint32_t mask = full_mask(n);
    // Sub-masks T of [n-1], then X of the complement.
    for (std::uint32_t t = mask;; t = (t - 1) & mask) {
        const std::uint32_t rest = mask & ~t;
        for (std::uint32_t x = rest;; x = (x - 1) & rest) {
            const int r = std::popcount(mask & ~(t | x));
            for (int d = 0; d <= r; ++d) {
                const BlockKey key{t, x, d};
                const std::uint64_t dim = binomial(r, d) - block_ideal_rank(n, key);
                table[{std::popcount(t) + d, std::popcount(x) + d}] += dim;
            }
            if (x == 0) break;
        }
        if (t == 0) break;
    }
    return table;
}

Monomial leading_monomial(const Multivector& f) {
    if (f.is_zero()) throw std::invalid_argument("zero has no leading term");
    Monomial best = f.terms().begin()->first;
    for (const auto& [m, c] : f.terms())
        if (lex_greater(m, best)) best = m;
    return best;
}

BasisReport verify_basis(int n) {
    check_n(n);
    BasisReport rep;
    rep.n = n;
    rep.phi_count = enumerate(n).size();
    rep.monomial_count = std::uint64_t{1} << (2 * (n - 1));
    rep.dims = fdr_dimensions(n);
    for (const auto& [ij, dim] : rep.dims) rep.quotient_dim += dim;
    rep.ideal_rank = rep.monomial_count - rep.quotient_dim;
    rep.count_matches = rep.phi_count == rep.quotient_dim;
    if (!rep.count_matches)
        rep.witnesses.push_back("|Phi| = " + std::to_string(rep.phi_count) + " but dim = " + std::to_string(rep.quotient_dim));

    rep.independent = true;
    rep.leading_terms_ok = true;
    for (const auto& [key, parts] : phi_by_block(n)) {
        const BlockFactor& bf = block_factor(n, key);
        if (bf.combined_rank != bf.ideal_rank + bf.basis.size()) {
            rep.independent = false;
            rep.witnesses.push_back("dependent block at " + bf.basis.front().to_string());
        }
        std::set<Monomial> seen;
        for (const auto& pi : parts) {
            std::uint32_t minima = 0;
            for (auto [a, b] : pi.pairs()) minima |= std::uint32_t{1} << (a - 1);
            const Monomial expected(key.theta_only | minima, key.xi_only | minima);
            const Monomial lead = leading_monomial(g_pi(pi));
            if (lead != expected || !seen.insert(lead).second) {
                rep.leading_terms_ok = false;
                rep.witnesses.push_back("leading term mismatch at " + pi.to_string());
            }
        }
    }
    return rep;
}

InjectivityReport injectivity_check(int n) {
    check_n(n);
    InjectivityReport rep;
    rep.n = n;
    std::map<std::pair<int, int>, InjectivityCell> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells[{i, j}] = InjectivityCell{i, j};
    const Multivector dd = Multivector::diagonal(n);
    const std::uint32_t mask = full_mask(n);
    for (std::uint32_t t = mask;; t = (t - 1) & mask) {
        const std::uint32_t rest = mask & ~t;
        for (std::uint32_t x = rest;; x = (x - 1) & rest) {
            const int r = std::popcount(mask & ~(t | x));
            for (int d = 0; d <= r; ++d) {
                const BlockKey key{t, x, d};
                auto& cell = cells[{std::popcount(t) + d, std::popcount(x) + d}];
                const BlockKey up{t, x, d + 1};
                // Lambda level: D from block d into block d+1 is injective if d+1 carries basis elements.
                if (phi_by_block(n).count(up) && block_ideal_rank(n, up) != binomial(r, d))
                    cell.lambda_injective_where_needed = false;
                const BlockFactor& bf = block_factor(n, key);
                cell.source_dim += bf.basis.size();
                if (bf.basis.empty() || d + 1 > r) continue;
                // [f] -> [D f] in (D Lambda / D^2 Lambda): rank of [D G | D D m''] minus rank of [D D m''].
                const auto rows = block_monomials(n, up);
                std::vector<Multivector> cols;
                for (const auto& pi : bf.basis) cols.push_back(wedge(dd, g_pi(pi)));
                std::vector<Multivector> dd_cols;
                for (const auto& g : ideal_generators(n, key)) dd_cols.push_back(wedge(dd, g));
                const std::size_t base = rank(columns_matrix(dd_cols, rows));
                cols.insert(cols.end(), dd_cols.begin(), dd_cols.end());
                cell.image_rank += rank(columns_matrix(cols, rows)) - base;
            }
            if (x == 0) break;
        }
        if (t == 0) break;
    }
    for (auto& [ij, cell] : cells) rep.cells.push_back(cell);
    return rep;
}

}  // namespace fdr
