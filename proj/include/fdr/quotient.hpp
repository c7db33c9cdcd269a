#pragma once

// FDR_n = Lambda / <D>, D = sum theta_i xi'_i.
//
// Multiplication by D preserves the set T of indices carrying only theta and
// the set X carrying only xi'; it adds one doubled index from the remaining
// set R = [n-1] \ (T u X).  So Lambda splits into blocks (T, X, d) spanned by
// theta_{T u P} xi'_{X u P}, P subset of R, |P| = d, and every G_pi lies in the
// block whose T, X are its theta/xi' singletons and whose d is its pair count.
// All rank and reduction work is done block by block.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdr/basisops.hpp"
#include "fdr/exterior.hpp"
#include "fdr/linalg.hpp"
#include "fdr/partitions.hpp"

namespace fdr {

struct BlockKey {
    std::uint32_t theta_only = 0;
    std::uint32_t xi_only = 0;
    int d = 0;
    friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

BlockKey block_of(Monomial m);
BlockKey block_of(const LabeledPartition& pi);

/// Monomials of a block, lex-decreasing.
std::vector<Monomial> block_monomials(int n, const BlockKey& key);

/// rank of D wedge (-) from block (T, X, d-1) into block (T, X, d).
std::size_t block_ideal_rank(int n, const BlockKey& key);

/// Factorization of one block: columns are G_pi (pi in Phi(n) of this block)
/// followed by D m' for the monomials m' of block (T, X, d-1).
struct BlockFactor {
    BlockKey key;
    std::vector<Monomial> rows;
    std::vector<LabeledPartition> basis;
    std::size_t ideal_generators = 0;
    std::size_t ideal_rank = 0;
    std::size_t combined_rank = 0;
    ColumnEchelon echelon;
};

/// Cached per (n, key); safe for concurrent callers.
const BlockFactor& block_factor(int n, const BlockKey& key);

/// Phi(n) grouped by block.
const std::map<BlockKey, std::vector<LabeledPartition>>& phi_by_block(int n);

/// {D m : m a monomial of bidegree (i-1, j-1)}.
std::vector<Multivector> ideal_slice(int n, int i, int j);

/// Rank of ideal_slice(n, i, j) as one matrix, without blocking.
std::size_t ideal_slice_rank_unblocked(int n, int i, int j);

struct BasisCoords {
    int n = 0;
    std::map<LabeledPartition, Rational> coords;
    friend bool operator==(const BasisCoords&, const BasisCoords&) = default;
};

struct ReductionFailure : std::logic_error {
    using std::logic_error::logic_error;
};

/// Unique c with f - sum c_pi G_pi in <D>.
BasisCoords reduce_to_basis(const Multivector& f);

using BidegreeTable = std::map<std::pair<int, int>, std::uint64_t>;

/// dim (FDR_n)_{i,j} = C(n-1,i) C(n-1,j) - rank of the ideal slice, summed over blocks.
BidegreeTable fdr_dimensions(int n);

struct BasisReport {
    int n = 0;
    std::uint64_t phi_count = 0;
    std::uint64_t monomial_count = 0;
    std::uint64_t ideal_rank = 0;
    std::uint64_t quotient_dim = 0;
    BidegreeTable dims;
    bool count_matches = false;         ///< (a)
    bool independent = false;           ///< (b)
    bool leading_terms_ok = false;      ///< (c)
    std::vector<std::string> witnesses;
    bool ok() const { return count_matches && independent && leading_terms_ok; }
};

BasisReport verify_basis(int n);

/// Lex leading monomial under theta_1 > xi'_1 > theta_2 > ...
Monomial leading_monomial(const Multivector& f);

struct InjectivityCell {
    int i = 0, j = 0;
    /// Lambda level: D: Lambda_{i,j} -> Lambda_{i+1,j+1} injective on the span of
    /// the blocks that carry basis elements one degree up.
    bool lambda_injective_where_needed = true;
    /// Quotient level: [f] -> [D f] from FDR_{i,j} into (D Lambda / D^2 Lambda)_{i+1,j+1}.
    std::uint64_t source_dim = 0;
    std::uint64_t image_rank = 0;
    std::uint64_t kernel_dim() const { return source_dim - image_rank; }
};

struct InjectivityReport {
    int n = 0;
    std::vector<InjectivityCell> cells;
};

InjectivityReport injectivity_check(int n);

}  // namespace fdr
