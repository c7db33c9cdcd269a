#include "fdr/basisops.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace fdr {
namespace {

Multivector tau_pair(int i, int j, const Multivector& f) {
    return multiply_generator(i, Family::Xi, contract(j, Family::Theta, f)) +
           multiply_generator(j, Family::Xi, contract(i, Family::Theta, f));
}

Multivector tau_nblock(std::vector<int> elements, const Multivector& f) {
    std::sort(elements.begin(), elements.end());
    Multivector g = f;
    for (int c : elements)
        if (c != f.n()) g = contract(c, Family::Theta, g);
    return g;
}

std::vector<int> sorted_union(std::vector<int> base, const std::vector<int>& add, const std::vector<int>& remove) {
    std::vector<int> out;
    for (int e : base)
        if (std::find(remove.begin(), remove.end(), e) == remove.end()) out.push_back(e);
    out.insert(out.end(), add.begin(), add.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Multivector block_operator(const BlockSpec& block, const Multivector& f) {
    const int n = f.n();
    auto in_range = [n](int i) { return i >= 1 && i < n; };
    return std::visit(
        [&](const auto& b) -> Multivector {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, NBlockSpec>) {
                if (std::find(b.elements.begin(), b.elements.end(), n) == b.elements.end())
                    throw std::invalid_argument("n-block must contain n");
                for (int e : b.elements)
                    if (e != n && !in_range(e)) throw std::out_of_range("n-block element out of range");
                return tau_nblock(b.elements, f);
            } else if constexpr (std::is_same_v<T, PairSpec>) {
                if (!in_range(b.i) || !in_range(b.j) || b.i == b.j) throw std::invalid_argument("invalid pair block");
                return tau_pair(b.i, b.j, f);
            } else {
                if (!in_range(b.i)) throw std::out_of_range("singleton out of range");
                if (b.label == Family::Theta) return f;
                return multiply_generator(b.i, Family::Xi, contract(b.i, Family::Theta, f));
            }
        },
        block);
}

Multivector g_pi_blockops(const LabeledPartition& pi) {
    Multivector g = tau_nblock(pi.n_block(), Multivector::top_theta(pi.n()));
    for (auto [i, j] : pi.pairs()) g = tau_pair(i, j, g);
    for (auto [i, label] : pi.singletons()) g = block_operator(SingletonSpec{i, label}, g);
    return g;
}

Multivector g_pi_product(const LabeledPartition& pi) {
    const int n = pi.n();
    Multivector g = Multivector::one(n);
    for (auto [i, j] : pi.pairs()) {
        Multivector factor(n);
        factor.add_term(Monomial(Monomial::generator(Family::Theta, i).theta(), Monomial::generator(Family::Xi, i).xi()), 1);
        factor.add_term(Monomial(Monomial::generator(Family::Theta, j).theta(), Monomial::generator(Family::Xi, j).xi()), -1);
        g = wedge(g, factor);
    }
    for (auto [i, label] : pi.singletons()) g = wedge(g, Multivector::generator(n, label, i));
    return g * Rational(canonical_word(pi).sign);
}

int nblock_shuffle_sign(const LabeledPartition& pi) {
    int parity = 0, outside = 0;
    for (int i = 1; i < pi.n(); ++i) {
        if (pi.role(i) == LabeledPartition::kNBlock)
            parity += outside;
        else
            ++outside;
    }
    return parity % 2 == 0 ? 1 : -1;
}

const Multivector& g_pi(const LabeledPartition& pi) {
    static std::shared_mutex mutex;
    static std::map<LabeledPartition, Multivector> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(pi); it != cache.end()) return it->second;
    }
    Multivector value = g_pi_blockops(pi);
    std::unique_lock lock(mutex);
    return cache.try_emplace(pi, std::move(value)).first->second;
}

int equivariance_sign(const Permutation& sigma, const LabeledPartition& pi) {
    std::vector<int> images;
    for (int c : pi.n_block())
        if (c != pi.n()) images.push_back(sigma(c));
    return sigma.sign() * (inversions(images) % 2 == 0 ? 1 : -1);
}

Multivector skein_operator_sum(int a, int b, int c, int d, const Multivector& f) {
    return tau_pair(a, b, tau_pair(c, d, f)) + tau_pair(a, c, tau_pair(b, d, f)) + tau_pair(a, d, tau_pair(b, c, f));
}

NBlockRelation nblock_relation(int a1, int a2, const std::vector<int>& n_block, int n) {
    if (!(1 <= a1 && a1 < a2 && a2 < n)) throw std::invalid_argument("need 1 <= a1 < a2 <= n-1");
    if (std::find(n_block.begin(), n_block.end(), n) == n_block.end())
        throw std::invalid_argument("n-block must contain n");
    for (int e : n_block)
        if (e == a1 || e == a2) throw std::invalid_argument("pair and n-block must be disjoint");
    NBlockRelation rel;
    for (int e : n_block)
        if (a1 < e && e < a2) rel.between.push_back(e);
    std::sort(rel.between.begin(), rel.between.end());
    if (rel.between.empty()) throw std::invalid_argument("no n-block element between a1 and a2");
    const auto& bs = rel.between;
    const std::size_t m = bs.size();
    rel.terms.push_back({{a1, bs[0]}, sorted_union(n_block, {a2}, {bs[0]})});
    for (std::size_t i = 0; i + 1 < m; ++i)
        rel.terms.push_back({{bs[i], bs[i + 1]}, sorted_union(n_block, {a1, a2}, {bs[i], bs[i + 1]})});
    rel.terms.push_back({{bs[m - 1], a2}, sorted_union(n_block, {a1}, {bs[m - 1]})});
    rel.relation_sign = m % 2 == 1 ? 1 : -1;
    return rel;
}

Multivector nblock_operator_sum(int a1, int a2, const std::vector<int>& n_block, const Multivector& f,
                                std::optional<int> sign_override) {
    const NBlockRelation rel = nblock_relation(a1, a2, n_block, f.n());
    Multivector sum(f.n());
    for (const auto& t : rel.terms) sum += tau_pair(t.pair.i, t.pair.j, tau_nblock(t.n_block, f));
    return tau_pair(a1, a2, tau_nblock(n_block, f)) + sum * Rational(sign_override.value_or(rel.relation_sign));
}

// ---------------------------------------------------------------------------

void add_to(PartitionCombination& combo, const LabeledPartition& pi, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = combo.try_emplace(pi, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) combo.erase(it);
    }
}

Multivector evaluate(const PartitionCombination& combo, int n) {
    Multivector out(n);
    for (const auto& [pi, c] : combo) {
        if (pi.n() != n) throw AmbientMismatch("partition over a different n");
        out += g_pi(pi) * c;
    }
    return out;
}

std::string to_string(const PartitionCombination& combo) {
    std::vector<const LabeledPartition*> keys;
    for (const auto& entry : combo) keys.push_back(&entry.first);
    std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) { return serialization_less(*a, *b); });
    std::ostringstream os;
    for (auto* k : keys) os << combo.at(*k).get_str() << '\t' << k->to_string() << '\n';
    return os.str();
}

std::optional<Crossing> first_crossing(const LabeledPartition& pi) {
    const int n = pi.n();
    const auto pairs = pi.pairs();
    const auto nb = pi.n_block();
    std::optional<Crossing> best;
    std::vector<int> best_key;
    auto offer = [&](const Crossing& x, std::vector<int> key) {
        if (!best || key < best_key) {
            best = x;
            best_key = std::move(key);
        }
    };
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            auto [a, c] = pairs[p];
            auto [b, d] = pairs[q];
            if (a < b && b < c && c < d) offer({Crossing::Kind::PairPair, a, b, c, d}, {a, b, c, d});
        }
        auto [a1, a2] = pairs[p];
        for (int e : nb)
            if (a1 < e && e < a2) {
                offer({Crossing::Kind::PairNBlock, a1, e, a2, n}, {a1, e, a2, n});
                break;
            }
    }
    return best;
}

std::vector<std::pair<int, LabeledPartition>> resolve_crossing(const LabeledPartition& pi, const Crossing& x) {
    const int n = pi.n();
    std::vector<std::pair<int, LabeledPartition>> out;
    if (x.kind == Crossing::Kind::PairPair) {
        auto with_pairs = [&](int p, int q, int r, int s) {
            std::vector<int> roles = pi.roles();
            auto set = [&](int i, int j) {
                roles[static_cast<std::size_t>(i - 1)] = j;
                roles[static_cast<std::size_t>(j - 1)] = i;
            };
            set(p, q);
            set(r, s);
            return LabeledPartition(n, std::move(roles));
        };
        out.emplace_back(-1, with_pairs(x.a, x.b, x.c, x.d));
        out.emplace_back(-1, with_pairs(x.a, x.d, x.b, x.c));
        return out;
    }
    const NBlockRelation rel = nblock_relation(x.a, x.c, pi.n_block(), n);
    for (const auto& t : rel.terms) {
        // Old n-block plus {a, c} equals new n-block plus the new pair.
        std::vector<int> roles = pi.roles();
        for (int e : t.n_block)
            if (e != n) roles[static_cast<std::size_t>(e - 1)] = LabeledPartition::kNBlock;
        roles[static_cast<std::size_t>(t.pair.i - 1)] = t.pair.j;
        roles[static_cast<std::size_t>(t.pair.j - 1)] = t.pair.i;
        out.emplace_back(-rel.relation_sign, LabeledPartition(n, std::move(roles)));
    }
    return out;
}

StraightenResult straighten_combination(PartitionCombination combo, std::uint64_t max_rewrites) {
    StraightenResult result;
    for (;;) {
        auto it = combo.begin();
        std::optional<Crossing> x;
        for (; it != combo.end(); ++it)
            if ((x = first_crossing(it->first))) break;
        if (it == combo.end()) break;
        if (result.rewrites >= max_rewrites)
            throw IterationCapExceeded("straightening exceeded " + std::to_string(max_rewrites) + " rewrites");
        const LabeledPartition pi = it->first;
        const Rational c = it->second;
        combo.erase(it);
        for (auto& [coef, rho] : resolve_crossing(pi, *x)) add_to(combo, rho, c * coef);
        ++result.rewrites;
    }
    result.combination = std::move(combo);
    return result;
}

StraightenResult straighten(const Permutation& sigma, const LabeledPartition& pi, std::uint64_t max_rewrites) {
    if (!is_noncrossing(pi)) throw std::invalid_argument("straighten expects a noncrossing partition");
    PartitionCombination start;
    add_to(start, apply_perm_partition(sigma, pi), equivariance_sign(sigma, pi));
    return straighten_combination(std::move(start), max_rewrites);
}

}  // namespace fdr
