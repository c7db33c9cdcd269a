#include "fdr/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fdr/basisops.hpp"

namespace fdr {

IntPartition::IntPartition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
}

int IntPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

IntPartition IntPartition::conjugate() const {
    std::vector<int> c(static_cast<std::size_t>(part(0)), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return IntPartition(std::move(c));
}

std::string IntPartition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + "]";
}

bool dominates(const IntPartition& a, const IntPartition& b) {
    if (a.weight() != b.weight()) return false;
    int sa = 0, sb = 0;
    for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

std::vector<IntPartition> partitions_of(int m) {
    std::vector<IntPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

Integer hook_dim(const IntPartition& lambda) {
    const IntPartition conj = lambda.conjugate();
    Integer num = 1, den = 1;
    for (int i = 1; i <= lambda.weight(); ++i) num *= i;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.part(r); ++c) den *= (lambda.part(r) - c - 1) + (conj.part(c) - r - 1) + 1;
    return num / den;
}

SchurExpansion SchurExpansion::schur(const IntPartition& lambda, std::int64_t c) {
    SchurExpansion s;
    s.add(lambda, c);
    return s;
}

std::int64_t SchurExpansion::coefficient(const IntPartition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
}

void SchurExpansion::add(const IntPartition& lambda, std::int64_t c) {
    if (c == 0) return;
    if (!terms_.empty() && terms_.begin()->first.weight() != lambda.weight())
        throw std::invalid_argument("Schur expansion mixes weights");
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& o) {
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
}

Integer SchurExpansion::dimension() const {
    Integer d = 0;
    for (const auto& [l, c] : terms_) d += hook_dim(l) * Integer(static_cast<long>(c));
    return d;
}

std::string SchurExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [l, c] : terms_) {
        if (!s.empty()) s += ' ';
        s += (c > 0 ? "+" : "") + std::to_string(c) + " s" + l.to_string();
    }
    return s;
}

namespace {

void horizontal_strips(const IntPartition& lambda, int r, const std::function<void(const IntPartition&)>& fn) {
    const int len = lambda.length();
    std::vector<int> mu(static_cast<std::size_t>(len + 1));
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (row == len + 1) {
            if (left == 0) fn(IntPartition(mu));
            return;
        }
        const int base = lambda.part(row);
        const int cap = row == 0 ? base + left : std::min(lambda.part(row - 1) - base, left);
        for (int add = 0; add <= cap; ++add) {
            mu[static_cast<std::size_t>(row)] = base + add;
            rec(row + 1, left - add);
        }
    };
    rec(0, r);
}

}  // namespace

SchurExpansion pieri_h(const SchurExpansion& f, int r) {
    if (r < 0) throw std::invalid_argument("negative Pieri degree");
    SchurExpansion out;
    for (const auto& [l, c] : f.terms())
        horizontal_strips(l, r, [&](const IntPartition& mu) { out.add(mu, c); });
    return out;
}

SchurExpansion pieri_e(const SchurExpansion& f, int r) {
    if (r < 0) throw std::invalid_argument("negative Pieri degree");
    SchurExpansion out;
    for (const auto& [l, c] : f.terms())
        horizontal_strips(l.conjugate(), r, [&](const IntPartition& mu) { out.add(mu.conjugate(), c); });
    return out;
}

const SchurExpansion& h_expansion(int m) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<SchurExpansion>> memo;
    std::lock_guard lock(mutex);
    auto& slot = memo[m];
    if (!slot) slot = std::make_unique<SchurExpansion>(pieri_h(SchurExpansion::unit(), m));
    return *slot;
}

SchurExpansion pieri_product(const SchurExpansion& start, const std::vector<int>& hs, const std::vector<int>& es) {
    SchurExpansion f = start;
    for (int r : hs) f = pieri_h(f, r);
    for (int r : es) f = pieri_e(f, r);
    return f;
}

SchurExpansion two_row_schur_via_jt(int a, int b) {
    if (a < b || b < 0) throw std::invalid_argument("two-row shape needs a >= b >= 0");
    SchurExpansion first = pieri_h(h_expansion(a), b);
    if (b == 0) return first;
    return first - pieri_h(h_expansion(a + 1), b - 1);
}

bool frob_v_valid(int n, int k, int x, int y) {
    return k >= 0 && x >= 0 && y >= 0 && n - x - y - k - 1 >= k;
}

SchurExpansion frob_V(int n, int k, int x, int y) {
    if (!frob_v_valid(n, k, x, y)) throw std::invalid_argument("frob_V parameters outside the valid region");
    return pieri_product(SchurExpansion::schur(IntPartition({n - x - y - k - 1, k})), {}, {x, y});
}

BigradedSchur frob_fdr(int n) {
    BigradedSchur out;
    for (int k = 0; 2 * k <= n - 1; ++k)
        for (int x = 0; x <= n - 1; ++x)
            for (int y = 0; y <= n - 1; ++y)
                if (frob_v_valid(n, k, x, y)) out[{k + x, k + y}] += frob_V(n, k, x, y);
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return out;
}

BigradedSchur grfrob_product_side(int n) {
    BigradedSchur sum;
    const int total = n - 1;
    for (int k = 0; k <= total; ++k)
        for (int x = 0; k + x <= total; ++x)
            for (int y = 0; k + x + y <= total; ++y) {
                const int m = total - k - x - y;
                sum[{k + x, k + y}] += pieri_product(SchurExpansion::unit(), {k, m}, {x, y});
            }
    BigradedSchur out = sum;
    for (const auto& [ij, f] : sum) out[{ij.first + 1, ij.second + 1}] -= f;
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return out;
}

BigradedSchur truncate_total_degree(const BigradedSchur& b, int max_total) {
    BigradedSchur out;
    for (const auto& [ij, f] : b)
        if (ij.first + ij.second <= max_total) out.emplace(ij, f);
    return out;
}

std::string to_string(const BigradedSchur& b) {
    std::ostringstream os;
    for (const auto& [ij, f] : b) os << "q^" << ij.first << " t^" << ij.second << "\t" << f.to_string() << '\n';
    return os.str();
}

bool DominanceKillReport::ok() const {
    if (!lambda_nonzero || !lambda_nonzero_in_quotient) return false;
    return std::all_of(mu_kills.begin(), mu_kills.end(), [](const auto& e) { return e.second; });
}

LabeledPartition dominance_pi0(int n, int k) {
    if (k < 1 || 2 * k > n - 1) throw std::invalid_argument("need 1 <= k <= (n-1)/2");
    std::vector<LabeledPartition::Block> blocks;
    for (int t = 0; t < k; ++t) blocks.push_back({{n - 2 * k + t, n - 1 - t}, std::nullopt});
    LabeledPartition::Block nb;
    for (int i = 1; i <= n - 2 * k - 1; ++i) nb.elements.push_back(i);
    nb.elements.push_back(n);
    blocks.push_back(nb);
    return LabeledPartition::from_blocks(n, blocks);
}

DominanceKillReport dominance_kill_check(int n, int k) {
    DominanceKillReport rep;
    rep.n = n;
    rep.k = k;
    rep.lambda = IntPartition({n - k - 1, k});
    rep.pi0 = dominance_pi0(n, k);
    const Multivector image = symmetrize(rep.lambda.parts(), false, g_pi(rep.pi0));
    rep.lambda_nonzero = !image.is_zero();
    rep.lambda_nonzero_in_quotient = !reduce_to_basis(image).coords.empty();
    EnumerateFilter filter;
    filter.pairs = k;
    filter.theta_singletons = 0;
    filter.xi_singletons = 0;
    const auto span = enumerate(n, filter);
    for (int m = 1; m <= k; ++m) {
        const IntPartition mu({n - m, m - 1});
        bool kills = true;
        for (const auto& pi : span)
            if (!symmetrize(mu.parts(), false, g_pi(pi)).is_zero()) kills = false;
        rep.mu_kills.emplace_back(mu, kills);
    }
    return rep;
}

}  // namespace fdr
