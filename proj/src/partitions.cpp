#include "fdr/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fdr {

LabeledPartition::LabeledPartition(int n, std::vector<int> roles) : n_(n), roles_(std::move(roles)) {
    if (n < 2 || n > kMaxN) throw std::out_of_range("partition n outside supported range");
    if (static_cast<int>(roles_.size()) != n - 1) throw std::invalid_argument("role vector length must be n-1");
    for (int i = 1; i < n; ++i) {
        const int r = role(i);
        if (r == kNBlock || r == kTheta || r == kXi) continue;
        if (r < 1 || r >= n || r == i || role(r) != i) {
            throw std::invalid_argument("inconsistent pair roles at element " + std::to_string(i));
        }
    }
}

LabeledPartition LabeledPartition::from_blocks(int n, const std::vector<Block>& blocks) {
    std::vector<int> roles(static_cast<std::size_t>(n - 1), 99);
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    bool have_n = false;
    for (const Block& b : blocks) {
        if (b.elements.empty()) throw std::invalid_argument("empty block");
        for (int e : b.elements) {
            if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " outside [1, n]");
            if (seen[static_cast<std::size_t>(e)]) throw std::invalid_argument("element " + std::to_string(e) + " repeated");
            seen[static_cast<std::size_t>(e)] = true;
        }
        const bool holds_n = std::find(b.elements.begin(), b.elements.end(), n) != b.elements.end();
        if (holds_n) {
            if (b.label) throw std::invalid_argument("the block of n carries no label");
            have_n = true;
            for (int e : b.elements)
                if (e != n) roles[static_cast<std::size_t>(e - 1)] = kNBlock;
        } else if (b.elements.size() == 1) {
            if (!b.label) throw std::invalid_argument("singleton " + std::to_string(b.elements[0]) + " needs a :t or :x label");
            roles[static_cast<std::size_t>(b.elements[0] - 1)] = *b.label == Family::Theta ? kTheta : kXi;
        } else if (b.elements.size() == 2) {
            if (b.label) throw std::invalid_argument("2-blocks carry no label");
            roles[static_cast<std::size_t>(b.elements[0] - 1)] = b.elements[1];
            roles[static_cast<std::size_t>(b.elements[1] - 1)] = b.elements[0];
        } else {
            throw std::invalid_argument("blocks avoiding n must have size 1 or 2");
        }
    }
    if (!have_n) throw std::invalid_argument("no block contains n");
    for (int e = 1; e <= n; ++e)
        if (!seen[static_cast<std::size_t>(e)]) throw std::invalid_argument("element " + std::to_string(e) + " missing");
    return LabeledPartition(n, std::move(roles));
}

LabeledPartition LabeledPartition::parse(std::string_view text, int expected_n) {
    std::vector<Block> blocks;
    int largest = 0;
    std::string s(text);
    std::stringstream blocks_in(s);
    std::string chunk;
    while (std::getline(blocks_in, chunk, '/')) {
        chunk.erase(std::remove_if(chunk.begin(), chunk.end(), ::isspace), chunk.end());
        if (chunk.empty()) throw std::invalid_argument("empty block in '" + s + "'");
        Block b;
        if (auto colon = chunk.find(':'); colon != std::string::npos) {
            const std::string lab = chunk.substr(colon + 1);
            if (lab == "t") b.label = Family::Theta;
            else if (lab == "x") b.label = Family::Xi;
            else throw std::invalid_argument("unknown label ':" + lab + "'");
            chunk.resize(colon);
        }
        std::stringstream elems(chunk);
        std::string tok;
        while (std::getline(elems, tok, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad element '" + tok + "'");
            }
            if (used != tok.size()) throw std::invalid_argument("bad element '" + tok + "'");
            b.elements.push_back(v);
            largest = std::max(largest, v);
        }
        std::sort(b.elements.begin(), b.elements.end());
        blocks.push_back(std::move(b));
    }
    if (expected_n > 0 && largest != expected_n) {
        throw std::invalid_argument("partition '" + s + "' is over n=" + std::to_string(largest) +
                                    ", expected n=" + std::to_string(expected_n));
    }
    return from_blocks(largest, blocks);
}

std::vector<int> LabeledPartition::n_block() const {
    std::vector<int> out;
    for (int i = 1; i < n_; ++i)
        if (role(i) == kNBlock) out.push_back(i);
    out.push_back(n_);
    return out;
}

std::vector<std::pair<int, int>> LabeledPartition::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i < n_; ++i)
        if (role(i) > i) out.emplace_back(i, role(i));
    return out;
}

std::vector<std::pair<int, Family>> LabeledPartition::singletons() const {
    std::vector<std::pair<int, Family>> out;
    for (int i = 1; i < n_; ++i) {
        if (role(i) == kTheta) out.emplace_back(i, Family::Theta);
        if (role(i) == kXi) out.emplace_back(i, Family::Xi);
    }
    return out;
}

PartitionStats LabeledPartition::stats() const {
    PartitionStats s;
    s.n_block_size = 1;
    for (int r : roles_) {
        if (r == kNBlock) ++s.n_block_size;
        else if (r == kTheta) ++s.theta_singletons;
        else if (r == kXi) ++s.xi_singletons;
        else ++s.pairs;
    }
    s.pairs /= 2;
    return s;
}

std::vector<LabeledPartition::Block> LabeledPartition::canonical_blocks() const {
    std::vector<Block> out;
    bool n_block_emitted = false;
    const auto nb = n_block();
    for (int i = 1; i <= n_; ++i) {
        if (i == n_) {
            if (!n_block_emitted) out.push_back({nb, std::nullopt});
            break;
        }
        const int r = role(i);
        if (r == kNBlock) {
            if (!n_block_emitted) out.push_back({nb, std::nullopt});
            n_block_emitted = true;
        } else if (r == kTheta) {
            out.push_back({{i}, Family::Theta});
        } else if (r == kXi) {
            out.push_back({{i}, Family::Xi});
        } else if (r > i) {
            out.push_back({{i, r}, std::nullopt});
        }
    }
    return out;
}

std::string LabeledPartition::to_string() const {
    std::string out;
    for (const Block& b : canonical_blocks()) {
        if (!out.empty()) out += '/';
        for (std::size_t k = 0; k < b.elements.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(b.elements[k]);
        }
        if (b.label) out += *b.label == Family::Theta ? ":t" : ":x";
    }
    return out;
}

bool serialization_less(const LabeledPartition& a, const LabeledPartition& b) {
    auto key = [](const LabeledPartition& p) {
        std::vector<std::pair<std::vector<int>, int>> k;
        for (const auto& blk : p.canonical_blocks())
            k.emplace_back(blk.elements, blk.label ? (*blk.label == Family::Theta ? 1 : 2) : 0);
        return k;
    };
    if (a.n() != b.n()) return a.n() < b.n();
    return key(a) < key(b);
}

bool is_noncrossing(const LabeledPartition& pi) {
    const int n = pi.n();
    // Block ids: n-block is 0, a pair is named by its smaller element, singletons by themselves.
    std::vector<int> id(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i < n; ++i) {
        const int r = pi.role(i);
        id[static_cast<std::size_t>(i)] = r == LabeledPartition::kNBlock ? 0 : (r > 0 ? std::min(i, r) : i);
    }
    auto at = [&](int e) { return id[static_cast<std::size_t>(e)]; };
    for (int a = 1; a <= n; ++a)
        for (int c = a + 2; c <= n; ++c) {
            if (at(a) != at(c)) continue;
            for (int b = a + 1; b < c; ++b) {
                if (at(b) == at(a)) continue;
                for (int d = c + 1; d <= n; ++d)
                    if (at(d) == at(b)) return false;
            }
        }
    return true;
}

bool EnumerateFilter::accepts(const PartitionStats& s) const {
    if (n_block_size && s.n_block_size != *n_block_size) return false;
    if (theta_singletons && s.theta_singletons != *theta_singletons) return false;
    if (xi_singletons && s.xi_singletons != *xi_singletons) return false;
    if (pairs && s.pairs != *pairs) return false;
    return true;
}

void for_each_labeled_partition(int n, const std::function<void(const LabeledPartition&)>& fn) {
    if (n < 2 || n > kMaxN) throw std::out_of_range("partition n outside supported range");
    const int m = n - 1;
    std::vector<int> roles(static_cast<std::size_t>(m), 99);
    std::function<void(int)> rec = [&](int i) {
        while (i <= m && roles[static_cast<std::size_t>(i - 1)] != 99) ++i;
        if (i > m) {
            fn(LabeledPartition(n, roles));
            return;
        }
        auto& r = roles[static_cast<std::size_t>(i - 1)];
        for (int choice : {LabeledPartition::kNBlock, LabeledPartition::kTheta, LabeledPartition::kXi}) {
            r = choice;
            rec(i + 1);
        }
        for (int j = i + 1; j <= m; ++j) {
            auto& rj = roles[static_cast<std::size_t>(j - 1)];
            if (rj != 99) continue;
            r = j;
            rj = i;
            rec(i + 1);
            rj = 99;
        }
        r = 99;
    };
    rec(1);
}

std::vector<LabeledPartition> enumerate(int n, const EnumerateFilter& filter) {
    std::vector<LabeledPartition> out;
    for_each_labeled_partition(n, [&](const LabeledPartition& p) {
        if (!filter.accepts(p.stats())) return;
        if (filter.noncrossing_only && !is_noncrossing(p)) return;
        out.push_back(p);
    });
    std::sort(out.begin(), out.end(), serialization_less);
    return out;
}

CanonicalWord canonical_word(const LabeledPartition& pi) {
    CanonicalWord w;
    for (auto [i, j] : pi.pairs()) {
        w.word.push_back(i);
        w.word.push_back(j);
    }
    for (auto [i, label] : pi.singletons()) w.word.push_back(i);
    w.sign = inversions(w.word) % 2 == 0 ? 1 : -1;
    return w;
}

LabeledPartition apply_perm_partition(const Permutation& sigma, const LabeledPartition& pi) {
    const int n = pi.n();
    if (sigma.size() != n - 1) throw std::invalid_argument("permutation degree must be n-1");
    std::vector<int> roles(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
        const int r = pi.role(i);
        roles[static_cast<std::size_t>(sigma(i) - 1)] = r > 0 ? sigma(r) : r;
    }
    return LabeledPartition(n, std::move(roles));
}

// ---------------------------------------------------------------------------
// Paths

std::string MotzkinPath::to_string() const {
    std::string s;
    for (Step st : steps) {
        if (!s.empty()) s += ',';
        switch (st) {
            case Step::Up: s += 'U'; break;
            case Step::Down: s += 'D'; break;
            case Step::FlatTheta: s += "H(t)"; break;
            case Step::FlatXi: s += "H(x)"; break;
        }
    }
    return s;
}

bool is_valid_path(const MotzkinPath& p) {
    if (p.steps.empty() || p.steps.front() != Step::Up) return false;
    int height = 0;
    for (Step st : p.steps) {
        if (st == Step::Up) ++height;
        if (st == Step::Down) --height;
        if (height < 1) return false;
    }
    return true;
}

MotzkinPath to_motzkin(const LabeledPartition& pi) {
    if (!is_noncrossing(pi)) throw std::invalid_argument("to_motzkin requires a noncrossing partition");
    MotzkinPath p;
    p.steps.push_back(Step::Up);
    for (int i = 1; i < pi.n(); ++i) {
        const int r = pi.role(i);
        if (r == LabeledPartition::kTheta) p.steps.push_back(Step::FlatTheta);
        else if (r == LabeledPartition::kXi) p.steps.push_back(Step::FlatXi);
        else if (r == LabeledPartition::kNBlock || r > i) p.steps.push_back(Step::Up);
        else p.steps.push_back(Step::Down);
    }
    return p;
}

LabeledPartition from_motzkin(const MotzkinPath& p) {
    if (!is_valid_path(p)) throw std::invalid_argument("invalid path " + p.to_string());
    const int n = static_cast<int>(p.steps.size());
    std::vector<int> roles(static_cast<std::size_t>(n - 1), LabeledPartition::kNBlock);
    std::vector<int> open;  // labels of unmatched up steps (the leading n-step is implicit)
    for (int label = 1; label < n; ++label) {
        switch (p.steps[static_cast<std::size_t>(label)]) {
            case Step::Up: open.push_back(label); break;
            case Step::Down: {
                const int u = open.back();
                open.pop_back();
                roles[static_cast<std::size_t>(u - 1)] = label;
                roles[static_cast<std::size_t>(label - 1)] = u;
                break;
            }
            case Step::FlatTheta: roles[static_cast<std::size_t>(label - 1)] = LabeledPartition::kTheta; break;
            case Step::FlatXi: roles[static_cast<std::size_t>(label - 1)] = LabeledPartition::kXi; break;
        }
    }
    return LabeledPartition(n, std::move(roles));
}

std::vector<MotzkinPath> enumerate_paths(int n) {
    std::vector<MotzkinPath> out;
    MotzkinPath p;
    p.steps.assign(static_cast<std::size_t>(n), Step::Up);
    std::function<void(int, int)> rec = [&](int pos, int height) {
        if (pos == n) {
            out.push_back(p);
            return;
        }
        for (Step st : {Step::Up, Step::Down, Step::FlatTheta, Step::FlatXi}) {
            const int h = height + (st == Step::Up) - (st == Step::Down);
            if (h < 1) continue;
            p.steps[static_cast<std::size_t>(pos)] = st;
            rec(pos + 1, h);
        }
    };
    if (n >= 1) rec(1, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Tableaux

bool is_standard(const TwoRowTableau& t) {
    if (t.first.size() < t.second.size()) return false;
    std::vector<int> all = t.first;
    all.insert(all.end(), t.second.begin(), t.second.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1) return false;
    for (const auto* row : {&t.first, &t.second})
        for (std::size_t i = 1; i < row->size(); ++i)
            if ((*row)[i - 1] >= (*row)[i]) return false;
    for (std::size_t i = 0; i < t.second.size(); ++i)
        if (t.first[i] >= t.second[i]) return false;
    return true;
}

TwoRowTableau phi_to_syt(const LabeledPartition& pi) {
    if (!pi.singletons().empty()) throw std::invalid_argument("phi_to_syt requires a partition without singletons");
    if (!is_noncrossing(pi)) throw std::invalid_argument("phi_to_syt requires a noncrossing partition");
    TwoRowTableau t;
    for (int i = 1; i < pi.n(); ++i) {
        const int r = pi.role(i);
        (r > 0 && r < i ? t.second : t.first).push_back(i);
    }
    return t;
}

LabeledPartition syt_to_phi(const TwoRowTableau& t) {
    if (!is_standard(t)) throw std::invalid_argument("syt_to_phi requires a standard tableau");
    const int n = static_cast<int>(t.first.size() + t.second.size()) + 1;
    std::vector<int> roles(static_cast<std::size_t>(n - 1), LabeledPartition::kNBlock);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int big : t.second) used[static_cast<std::size_t>(big)] = true;
    for (int big : t.second) {
        int small = big - 1;
        while (small >= 1 && used[static_cast<std::size_t>(small)]) --small;
        if (small < 1) throw std::logic_error("second-row entry without a partner");
        used[static_cast<std::size_t>(small)] = true;
        roles[static_cast<std::size_t>(small - 1)] = big;
        roles[static_cast<std::size_t>(big - 1)] = small;
    }
    return LabeledPartition(n, std::move(roles));
}

std::vector<TwoRowTableau> enumerate_two_row_syt(int a, int b) {
    std::vector<TwoRowTableau> out;
    TwoRowTableau t;
    std::function<void(int)> rec = [&](int next) {
        if (next > a + b) {
            out.push_back(t);
            return;
        }
        if (static_cast<int>(t.first.size()) < a) {
            t.first.push_back(next);
            rec(next + 1);
            t.first.pop_back();
        }
        if (static_cast<int>(t.second.size()) < b && t.second.size() < t.first.size()) {
            t.second.push_back(next);
            rec(next + 1);
            t.second.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace fdr
