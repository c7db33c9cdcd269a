#pragma once

// Block operators, the basis vectors G_pi, the two crossing-resolution
// relations and the straightening of sigma . G_pi into noncrossing terms.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fdr/exterior.hpp"
#include "fdr/partitions.hpp"

namespace fdr {

struct NBlockSpec {
    std::vector<int> elements;  ///< subset of [n] containing n
};
struct PairSpec {
    int i = 0;
    int j = 0;
};
struct SingletonSpec {
    int i = 0;
    Family label = Family::Theta;
};
using BlockSpec = std::variant<NBlockSpec, PairSpec, SingletonSpec>;

/// tau_B.  The n-block case contracts by theta_c for c in B \ {n}, smallest first.
Multivector block_operator(const BlockSpec& block, const Multivector& f);

/// tau_{B_1} ... tau_{B_k}(theta_1 ... theta_{n-1}) with the n-block applied first.
Multivector g_pi_blockops(const LabeledPartition& pi);

/// (-1)^inv(word) * prod_{pairs}(theta_i xi'_i - theta_j xi'_j) * prod_{singletons} theta_i or xi'_i.
Multivector g_pi_product(const LabeledPartition& pi);

/// G_pi_blockops = nblock_shuffle_sign(pi) * G_pi_product: the n-block operator
/// sends theta_1...theta_{n-1} to this sign times the remaining thetas ascending,
/// i.e. (-1)^(sum over c in B minus n of #{i < c : i not in B}).
int nblock_shuffle_sign(const LabeledPartition& pi);

/// Memoized G_pi (block-operator route).  Thread-safe.
const Multivector& g_pi(const LabeledPartition& pi);

/// sigma . G_pi = equivariance_sign(sigma, pi) * G_{sigma pi}.  The factor is
/// sign(sigma) times the sign of the order sigma induces on the n-block minus n.
int equivariance_sign(const Permutation& sigma, const LabeledPartition& pi);

// ---------------------------------------------------------------------------
// Relations

/// tau_ab tau_cd f + tau_ac tau_bd f + tau_ad tau_bc f (vanishes identically).
Multivector skein_operator_sum(int a, int b, int c, int d, const Multivector& f);

/// One term tau_pair tau_nblock of the n-block relation.
struct NBlockTerm {
    PairSpec pair;
    std::vector<int> n_block;  ///< ascending, contains n
};

struct NBlockRelation {
    /// b_1 < ... < b_m, the n-block elements strictly between a_1 and a_2
    std::vector<int> between;
    /// (a_1,b_1), (b_1,b_2), ..., (b_m,a_2) with the matching n-block swaps
    std::vector<NBlockTerm> terms;
    /// tau_A tau_B = -relation_sign * sum(terms).  The printed form uses +1
    /// throughout; exact evaluation shows the factor is (-1)^(m-1).
    int relation_sign = 1;
};

/// Requires A = {a1 < a2} in [n-1], disjoint from B, n in B, some b in B with a1 < b < a2.
NBlockRelation nblock_relation(int a1, int a2, const std::vector<int>& n_block, int n);

/// tau_A tau_B f + sign_override * sum tau_pair tau_B' f, where sign_override
/// defaults to relation.relation_sign.  Vanishes identically for the default.
Multivector nblock_operator_sum(int a1, int a2, const std::vector<int>& n_block, const Multivector& f,
                                std::optional<int> sign_override = std::nullopt);

// ---------------------------------------------------------------------------
// Straightening

using PartitionCombination = std::map<LabeledPartition, Rational>;

void add_to(PartitionCombination& combo, const LabeledPartition& pi, const Rational& c);
Multivector evaluate(const PartitionCombination& combo, int n);
/// "coeff<TAB>partition" lines in serialization order.
std::string to_string(const PartitionCombination& combo);

struct Crossing {
    enum class Kind { PairPair, PairNBlock } kind = Kind::PairPair;
    /// PairPair: {a, c} and {b, d} with a < b < c < d.  PairNBlock: pair {a, c}; b, d unused.
    int a = 0, b = 0, c = 0, d = 0;
};

/// The crossing whose sorted participating elements are lexicographically smallest.
std::optional<Crossing> first_crossing(const LabeledPartition& pi);

/// Rewrites pi at the crossing; returns coefficient/partition pairs whose G's sum to G_pi.
std::vector<std::pair<int, LabeledPartition>> resolve_crossing(const LabeledPartition& pi, const Crossing& x);

struct IterationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StraightenResult {
    PartitionCombination combination;
    std::uint64_t rewrites = 0;
};

inline constexpr std::uint64_t kDefaultMaxRewrites = 1'000'000;

/// Expresses sigma . G_pi in {G_rho : rho in Phi(n)}.
StraightenResult straighten(const Permutation& sigma, const LabeledPartition& pi,
                            std::uint64_t max_rewrites = kDefaultMaxRewrites);

/// Rewrites an arbitrary combination over Psi(n) to noncrossing support.
StraightenResult straighten_combination(PartitionCombination combo,
                                        std::uint64_t max_rewrites = kDefaultMaxRewrites);

}  // namespace fdr
