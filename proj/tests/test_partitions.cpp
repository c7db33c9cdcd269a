#include <doctest.h>

#include <set>

#include "fdr/partitions.hpp"

using namespace fdr;

namespace {

std::uint64_t binom(int m, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(m - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Independent oracle: all set partitions of [n] by restricted growth strings,
// then block-size filtering and both singleton labelings.
struct OracleCounts {
    std::uint64_t psi = 0, phi = 0;
};

bool blocks_cross(const std::vector<std::vector<int>>& blocks) {
    for (std::size_t p = 0; p < blocks.size(); ++p)
        for (std::size_t q = 0; q < blocks.size(); ++q) {
            if (p == q) continue;
            for (int a : blocks[p])
                for (int c : blocks[p])
                    for (int b : blocks[q])
                        for (int d : blocks[q])
                            if (a < b && b < c && c < d) return true;
        }
    return false;
}

OracleCounts oracle_counts(int n) {
    OracleCounts out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int max_label) {
        if (pos == n) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_label + 1));
            for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
            int singletons = 0;
            for (const auto& b : blocks) {
                const bool has_n = b.back() == n;
                if (!has_n && b.size() > 2) return;
                if (!has_n && b.size() == 1) ++singletons;
            }
            const std::uint64_t labelings = std::uint64_t{1} << singletons;
            out.psi += labelings;
            if (!blocks_cross(blocks)) out.phi += labelings;
            return;
        }
        for (int l = 0; l <= max_label + 1; ++l) {
            rgs[static_cast<std::size_t>(pos)] = l;
            rec(pos + 1, std::max(max_label, l));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
    return out;
}

}  // namespace

TEST_CASE("parse and print") {
    const auto pi = LabeledPartition::parse("1:t/2,5/3,4/6,8/7:x");
    CHECK(pi.n() == 8);
    CHECK(pi.to_string() == "1:t/2,5/3,4/6,8/7:x");
    CHECK(pi.n_block() == std::vector<int>{6, 8});
    CHECK(pi.pairs() == std::vector<std::pair<int, int>>{{2, 5}, {3, 4}});
    CHECK(pi.singletons() == std::vector<std::pair<int, Family>>{{1, Family::Theta}, {7, Family::Xi}});
    const auto s = pi.stats();
    CHECK(s.pairs == 2);
    CHECK(s.theta_singletons == 1);
    CHECK(s.xi_singletons == 1);
    CHECK(s.n_block_size == 2);
    CHECK(LabeledPartition::parse("6,8/2,5/7:x/3,4/1:t") == pi);
    CHECK(LabeledPartition::parse("2,3/4,5/7:t/1,8,6").to_string() == "1,6,8/2,3/4,5/7:t");
}

TEST_CASE("malformed partitions are rejected") {
    CHECK_THROWS(LabeledPartition::parse("1:t/2,5/3,4/5,6,8/7:x"));
    CHECK_THROWS(LabeledPartition::parse("1/2,3"));
    CHECK_THROWS(LabeledPartition::parse("1,2,3/4"));
    CHECK_THROWS(LabeledPartition::parse("1,2:t/3"));
    CHECK_THROWS(LabeledPartition::parse("1:q/2"));
    CHECK_THROWS(LabeledPartition::parse("1:t/3"));
    CHECK_THROWS(LabeledPartition::parse("1:t/2", 3));
}

TEST_CASE("enumeration counts agree with a set-partition oracle") {
    for (int n = 2; n <= 7; ++n) {
        const auto o = oracle_counts(n);
        std::uint64_t psi = 0;
        for_each_labeled_partition(n, [&](const LabeledPartition&) { ++psi; });
        CHECK(psi == o.psi);
        CHECK(enumerate(n).size() == o.phi);
        CHECK(o.phi == binom(2 * n - 1, n));
        EnumerateFilter all;
        all.noncrossing_only = false;
        CHECK(enumerate(n, all).size() == o.psi);
    }
}

TEST_CASE("small cases") {
    CHECK(enumerate(2).size() == 3);
    const auto phi3 = enumerate(3);
    CHECK(phi3.size() == 10);
    std::set<std::string> names;
    for (const auto& p : phi3) names.insert(p.to_string());
    CHECK(names.count("1,2,3"));
    CHECK(names.count("1,2/3"));
    CHECK(names.count("1:t/2:x/3"));
    CHECK(names.count("1,3/2:x"));
}

TEST_CASE("enumeration is sorted, duplicate free and statistics-consistent") {
    for (int n = 2; n <= 6; ++n) {
        const auto phi = enumerate(n);
        for (std::size_t i = 1; i < phi.size(); ++i) CHECK(serialization_less(phi[i - 1], phi[i]));
        std::uint64_t total = 0;
        for (int k = 0; 2 * k < n; ++k)
            for (int t = 0; t < n; ++t)
                for (int x = 0; x < n; ++x) {
                    EnumerateFilter f;
                    f.pairs = k;
                    f.theta_singletons = t;
                    f.xi_singletons = x;
                    for (const auto& p : enumerate(n, f)) {
                        const auto s = p.stats();
                        CHECK(s.pairs == k);
                        CHECK(s.theta_singletons == t);
                        CHECK(s.xi_singletons == x);
                        CHECK(s.n_block_size == n - 2 * k - t - x);
                        ++total;
                    }
                }
        CHECK(total == phi.size());
    }
}

TEST_CASE("crossings") {
    CHECK_FALSE(is_noncrossing(LabeledPartition::parse("1,3/2,4/5")));
    CHECK(is_noncrossing(LabeledPartition::parse("1,4/2,3/5")));
    CHECK_FALSE(is_noncrossing(LabeledPartition::parse("1,3/2,5/4:t")));
    CHECK(is_noncrossing(LabeledPartition::parse("1,2,5/3,4")));
    CHECK_FALSE(is_noncrossing(LabeledPartition::parse("2,5/4,7/1,3,8/6:t")));
}

TEST_CASE("canonical word") {
    const auto w = canonical_word(LabeledPartition::parse("1:t/2,5/3,4/6,8/7:x"));
    CHECK(w.word == std::vector<int>{2, 5, 3, 4, 1, 7});
    CHECK(w.sign == 1);
    CHECK(canonical_word(LabeledPartition::parse("1:t/2:x/3")).sign == 1);
    CHECK(canonical_word(LabeledPartition::parse("1,3/2:t/4")).sign == -1);
}

TEST_CASE("permutation action on partitions") {
    const auto sigma = Permutation::parse("(3 5 7 6)", 7);
    const auto pi = LabeledPartition::parse("2,3/4,5/7:t/1,8,6");
    CHECK(apply_perm_partition(sigma, pi) == LabeledPartition::parse("2,5/4,7/6:t/1,3,8"));
    for_each_labeled_partition(5, [&](const LabeledPartition& p) {
        const auto s = Permutation::parse("2 3 1 4", 4);
        const auto q = apply_perm_partition(s, p);
        CHECK(apply_perm_partition(s.inverse(), q) == p);
        CHECK(q.stats() == p.stats());
    });
    CHECK_THROWS(apply_perm_partition(Permutation::identity(3), pi));
}

TEST_CASE("Motzkin bijection") {
    for (int n = 2; n <= 7; ++n) {
        const auto phi = enumerate(n);
        const auto paths = enumerate_paths(n);
        CHECK(phi.size() == paths.size());
        std::set<MotzkinPath> seen;
        for (const auto& p : phi) {
            const auto path = to_motzkin(p);
            CHECK(is_valid_path(path));
            CHECK(from_motzkin(path) == p);
            seen.insert(path);
        }
        CHECK(seen.size() == phi.size());
    }
    CHECK_THROWS(to_motzkin(LabeledPartition::parse("1,3/2,4/5")));
    MotzkinPath bad;
    bad.steps = {Step::Up, Step::Down, Step::Down};
    CHECK_FALSE(is_valid_path(bad));
}

TEST_CASE("two-row tableaux bijection") {
    for (int n = 2; n <= 9; ++n)
        for (int k = 0; 2 * k <= n - 1; ++k) {
            EnumerateFilter f;
            f.pairs = k;
            f.theta_singletons = 0;
            f.xi_singletons = 0;
            const auto part = enumerate(n, f);
            const auto tabs = enumerate_two_row_syt(n - 1 - k, k);
            // Ballot-number oracle: f^{(a,b)} = C(a+b, b) (a-b+1)/(a+1).
            const int a = n - 1 - k;
            CHECK(tabs.size() == binom(a + k, k) * static_cast<std::uint64_t>(a - k + 1) / static_cast<std::uint64_t>(a + 1));
            CHECK(part.size() == tabs.size());
            for (const auto& p : part) {
                const auto t = phi_to_syt(p);
                CHECK(is_standard(t));
                CHECK(syt_to_phi(t) == p);
            }
        }
    TwoRowTableau bad{{1, 3}, {2, 4}};
    CHECK(is_standard(bad));
    bad.second = {4, 2};
    CHECK_FALSE(is_standard(bad));
}
