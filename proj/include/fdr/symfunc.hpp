#pragma once

// Schur-basis arithmetic restricted to what h/e Pieri products need.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fdr/exterior.hpp"
#include "fdr/partitions.hpp"
#include "fdr/quotient.hpp"

namespace fdr {

class IntPartition {
public:
    IntPartition() = default;
    /// Zero parts are dropped; throws unless weakly decreasing and nonnegative.
    explicit IntPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    /// Part i (0-based), 0 beyond the length.
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    IntPartition conjugate() const;
    std::string to_string() const;  ///< "[3,1]"

    friend bool operator==(const IntPartition&, const IntPartition&) = default;
    friend auto operator<=>(const IntPartition&, const IntPartition&) = default;

private:
    std::vector<int> parts_;
};

/// Partial order: a dominates b (equal weights, all partial sums of a >= those of b).
bool dominates(const IntPartition& a, const IntPartition& b);

/// All partitions of m, in decreasing lexicographic order.
std::vector<IntPartition> partitions_of(int m);

Integer hook_dim(const IntPartition& lambda);

class SchurExpansion {
public:
    using Terms = std::map<IntPartition, std::int64_t>;

    SchurExpansion() = default;
    static SchurExpansion schur(const IntPartition& lambda, std::int64_t c = 1);
    static SchurExpansion unit() { return schur(IntPartition{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coefficient(const IntPartition& lambda) const;
    void add(const IntPartition& lambda, std::int64_t c);

    SchurExpansion& operator+=(const SchurExpansion& o);
    SchurExpansion& operator-=(const SchurExpansion& o);
    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
    friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }
    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

    /// Sum of c_lambda f^lambda.
    Integer dimension() const;
    /// "+1 s[3,1] -2 s[2,2]", or "0".
    std::string to_string() const;

private:
    Terms terms_;
};

/// Multiply by h_r (add horizontal strips of size r).
SchurExpansion pieri_h(const SchurExpansion& f, int r);
/// Multiply by e_r (add vertical strips of size r).
SchurExpansion pieri_e(const SchurExpansion& f, int r);

/// Schur expansion of h_m; memoized.
const SchurExpansion& h_expansion(int m);

/// Product of s_lambda by h_{r_1} h_{r_2} ... (Pieri) then by e_{c_1} e_{c_2} ...
SchurExpansion pieri_product(const SchurExpansion& start, const std::vector<int>& hs, const std::vector<int>& es);

/// s_{(a,b)} = h_a h_b - h_{a+1} h_{b-1}, each product expanded by Pieri.
SchurExpansion two_row_schur_via_jt(int a, int b);

/// k pairs, x and y singletons of the two labels, and n-x-y-k-1 >= k >= 0.
bool frob_v_valid(int n, int k, int x, int y);

/// s_{(n-x-y-k-1, k)} s_{(1^x)} s_{(1^y)}.
SchurExpansion frob_V(int n, int k, int x, int y);

using BigradedSchur = std::map<std::pair<int, int>, SchurExpansion>;

/// (i, j) -> sum over k+x = i, k+y = j of frob_V(n, k, x, y).  Zero entries omitted.
BigradedSchur frob_fdr(int n);

/// Coefficient of z^{n-1} in (1-qt) prod (1+x q z)(1+x t z)/((1-x z)(1-x qt z)),
/// i.e. (1-qt) sum_{k+x+y+m=n-1} h_k h_m e_x e_y q^{k+x} t^{k+y}.  Zero entries omitted.
BigradedSchur grfrob_product_side(int n);

/// Entries with i + j <= n - 1 only.
BigradedSchur truncate_total_degree(const BigradedSchur& b, int max_total);

std::string to_string(const BigradedSchur& b);

struct DominanceKillReport {
    int n = 0, k = 0;
    IntPartition lambda;
    LabeledPartition pi0;
    /// [S_lambda]_+ G_{pi_0} != 0 in Lambda and its class != 0 in FDR_n.
    bool lambda_nonzero = false;
    bool lambda_nonzero_in_quotient = false;
    /// (mu, kills every G_pi of Phi(n,k,0,0) in Lambda)
    std::vector<std::pair<IntPartition, bool>> mu_kills;
    bool ok() const;
};

/// pi_0 has pairs {n-1, n-2k}, {n-2, n-2k+1}, ..., {n-k, n-k-1} and n-block {1, ..., n-2k-1, n}.
LabeledPartition dominance_pi0(int n, int k);

DominanceKillReport dominance_kill_check(int n, int k);

}  // namespace fdr
