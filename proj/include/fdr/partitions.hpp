#pragma once

// Labeled set partitions of [n] whose blocks avoiding n have size 1 or 2, with
// singletons labeled theta or xi'.  The block holding n may have any size.

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdr/exterior.hpp"

namespace fdr {

struct PartitionStats {
    int n_block_size = 0;  ///< |block containing n|, counting n itself
    int pairs = 0;
    int theta_singletons = 0;
    int xi_singletons = 0;
    friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
    friend auto operator<=>(const PartitionStats&, const PartitionStats&) = default;
};

class LabeledPartition {
public:
    /// Role codes for elements of [n-1]; a positive role is the partner of a pair.
    static constexpr int kNBlock = 0;
    static constexpr int kTheta = -1;
    static constexpr int kXi = -2;

    LabeledPartition() = default;
    /// roles[i-1] describes element i in [n-1]; validated.
    LabeledPartition(int n, std::vector<int> roles);

    struct Block {
        std::vector<int> elements;        ///< ascending
        std::optional<Family> label;      ///< singletons only
    };
    /// Builds from explicit blocks (any order); validates coverage of [n].
    static LabeledPartition from_blocks(int n, const std::vector<Block>& blocks);
    /// "1:t/2,5/3,4/6,8/7:x"; n is the largest element unless expected_n > 0.
    static LabeledPartition parse(std::string_view text, int expected_n = 0);

    int n() const { return n_; }
    int role(int i) const { return roles_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& roles() const { return roles_; }

    /// Block of n, ascending, including n.
    std::vector<int> n_block() const;
    /// 2-blocks (i < j) sorted by i.
    std::vector<std::pair<int, int>> pairs() const;
    /// Labeled singletons in increasing order.
    std::vector<std::pair<int, Family>> singletons() const;
    PartitionStats stats() const;

    /// Blocks sorted by minimum, as in the text form.
    std::vector<Block> canonical_blocks() const;
    std::string to_string() const;

    friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
    friend auto operator<=>(const LabeledPartition& a, const LabeledPartition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.roles_ <=> b.roles_;
    }

private:
    int n_ = 0;
    std::vector<int> roles_;
};

/// Order of the canonical text serialization, block by block.
bool serialization_less(const LabeledPartition& a, const LabeledPartition& b);

bool is_noncrossing(const LabeledPartition& pi);

struct EnumerateFilter {
    std::optional<int> n_block_size;
    std::optional<int> theta_singletons;
    std::optional<int> xi_singletons;
    std::optional<int> pairs;
    bool noncrossing_only = true;

    bool accepts(const PartitionStats& s) const;
};

/// Every matching member of Psi(n) (or Phi(n)) exactly once, in serialization order.
std::vector<LabeledPartition> enumerate(int n, const EnumerateFilter& filter = {});

/// Unordered visit of Psi(n); the callback sees each partition once.
void for_each_labeled_partition(int n, const std::function<void(const LabeledPartition&)>& fn);

struct CanonicalWord {
    std::vector<int> word;
    int sign = 1;
};
/// Pairs (ascending inside, by increasing minimum), then singletons ascending.
CanonicalWord canonical_word(const LabeledPartition& pi);

/// Relabels elements of [n-1] by sigma; n stays put.
LabeledPartition apply_perm_partition(const Permutation& sigma, const LabeledPartition& pi);

// ---------------------------------------------------------------------------
// Motzkin-like paths: first step is an unlabeled up step standing for n; the
// remaining n-1 steps carry labels 1..n-1.  Heights after the first step stay >= 1.

enum class Step : std::uint8_t { Up, Down, FlatTheta, FlatXi };

struct MotzkinPath {
    std::vector<Step> steps;
    friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
    friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;
    std::string to_string() const;
};

bool is_valid_path(const MotzkinPath& p);
MotzkinPath to_motzkin(const LabeledPartition& pi);
LabeledPartition from_motzkin(const MotzkinPath& p);
/// All valid paths with n steps, by brute force over step words.
std::vector<MotzkinPath> enumerate_paths(int n);

// ---------------------------------------------------------------------------
// Two-row standard Young tableaux on [n-1].

struct TwoRowTableau {
    std::vector<int> first;
    std::vector<int> second;
    friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;
    friend auto operator<=>(const TwoRowTableau&, const TwoRowTableau&) = default;
};

bool is_standard(const TwoRowTableau& t);
/// Second row = larger elements of the 2-blocks.  Requires no singletons.
TwoRowTableau phi_to_syt(const LabeledPartition& pi);
/// Pairs each second-row entry with the largest smaller unpaired entry; n = entries + 1.
LabeledPartition syt_to_phi(const TwoRowTableau& t);
/// Tableaux of shape (a, b) built entry by entry.
std::vector<TwoRowTableau> enumerate_two_row_syt(int a, int b);

}  // namespace fdr
