#include "fdr/exterior.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fdr {

namespace {

std::uint64_t bit_of(Family family, int index) {
    return std::uint64_t{1} << ((index - 1) + (family == Family::Xi ? 32 : 0));
}

void check_index(int n, int index) {
    if (index < 1 || index > n - 1) {
        throw std::out_of_range("generator index " + std::to_string(index) +
                                " outside [1, " + std::to_string(n - 1) + "]");
    }
}

void check_same_ambient(const Multivector& f, const Multivector& g) {
    if (f.n() != g.n()) {
        throw AmbientMismatch("ambient mismatch: n=" + std::to_string(f.n()) + " vs n=" +
                              std::to_string(g.n()));
    }
}

// theta_1 xi'_1 theta_2 xi'_2 ... packed so that earlier variables are more significant.
std::uint64_t interleaved(Monomial m) {
    std::uint64_t out = 0;
    for (int i = 0; i < 32; ++i) {
        if (m.theta() >> i & 1u) out |= std::uint64_t{1} << (63 - 2 * i);
        if (m.xi() >> i & 1u) out |= std::uint64_t{1} << (62 - 2 * i);
    }
    return out;
}

// Sign and image of a bit set under sigma (families sort independently).
std::pair<std::uint32_t, int> permute_bits(const Permutation& sigma, std::uint32_t bits) {
    std::vector<int> images;
    std::uint32_t out = 0;
    for (std::uint32_t rest = bits; rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest) + 1;
        const int j = sigma(i);
        images.push_back(j);
        out |= std::uint32_t{1} << (j - 1);
    }
    return {out, inversions(images) % 2 == 0 ? 1 : -1};
}

}  // namespace

int monomial_product_sign(Monomial a, Monomial b) {
    const std::uint64_t ka = a.key();
    const std::uint64_t kb = b.key();
    if ((ka & kb) != 0) return 0;
    int swaps = 0;
    for (std::uint64_t rest = kb; rest != 0; rest &= rest - 1) {
        const int q = std::countr_zero(rest);
        swaps += std::popcount(q == 63 ? 0 : ka >> (q + 1));
    }
    return swaps % 2 == 0 ? 1 : -1;
}

bool lex_greater(Monomial a, Monomial b) { return interleaved(a) > interleaved(b); }

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation word");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
    Permutation result = identity(m);
    // Compose right to left, as written: (c1)(c2) means apply c2 first.
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto& cyc = *it;
        std::vector<int> w = identity(m).word_;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int from = cyc[k];
            const int to = cyc[(k + 1) % cyc.size()];
            if (from < 1 || from > m || to < 1 || to > m) {
                throw std::invalid_argument("cycle entry outside [1, " + std::to_string(m) + "]");
            }
            w[static_cast<std::size_t>(from - 1)] = to;
        }
        result = Permutation(std::move(w)).compose(result);
    }
    return result;
}

Permutation Permutation::long_cycle(int m) {
    std::vector<int> w(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) w[static_cast<std::size_t>(i - 1)] = i % m + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text, int m) {
    auto read_ints = [](std::string_view s) {
        std::vector<int> out;
        std::string buf(s);
        std::replace(buf.begin(), buf.end(), ',', ' ');
        std::istringstream in(buf);
        std::string tok;
        while (in >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad permutation token '" + tok + "'");
            }
            if (used != tok.size()) throw std::invalid_argument("bad permutation token '" + tok + "'");
            out.push_back(v);
        }
        return out;
    };
    if (text.find('(') == std::string_view::npos) {
        auto w = read_ints(text);
        if (m > 0 && static_cast<int>(w.size()) != m) {
            throw std::invalid_argument("one-line permutation has length " +
                                        std::to_string(w.size()) + ", expected " +
                                        std::to_string(m));
        }
        return Permutation(std::move(w));
    }
    if (m <= 0) throw std::invalid_argument("cycle notation needs the degree");
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while (true) {
        const auto open = text.find('(', pos);
        if (open == std::string_view::npos) break;
        const auto close = text.find(')', open);
        if (close == std::string_view::npos) throw std::invalid_argument("unbalanced cycle");
        cycles.push_back(read_ints(text.substr(open + 1, close - open - 1)));
        pos = close + 1;
    }
    return from_cycles(m, cycles);
}

int inversions(const std::vector<int>& word) {
    int count = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++count;
    return count;
}

int Permutation::sign() const { return inversions(word_) % 2 == 0 ? 1 : -1; }

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i)
        w[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
    std::string s;
    for (int v : word_) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Multivector

Multivector::Multivector(int n) : n_(n) {
    if (n < 2 || n > kMaxN) throw std::out_of_range("ambient n outside [2, " + std::to_string(kMaxN) + "]");
}

Multivector::Multivector(int n, Monomial m, Rational c) : Multivector(n) { add_term(m, c); }

Multivector Multivector::generator(int n, Family family, int index) {
    check_index(n, index);
    return Multivector(n, Monomial::generator(family, index));
}

Multivector Multivector::top_theta(int n) {
    return Multivector(n, Monomial((std::uint32_t{1} << (n - 1)) - 1, 0));
}

Multivector Multivector::diagonal(int n) {
    Multivector d(n);
    for (int i = 1; i < n; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << (i - 1);
        d.add_term(Monomial(bit, bit), 1);
    }
    return d;
}

Rational Multivector::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(Monomial m, const Rational& c) {
    if (sgn(c) == 0) return;
    const std::uint32_t mask = (std::uint32_t{1} << (n_ - 1)) - 1;
    if ((m.theta() & ~mask) != 0 || (m.xi() & ~mask) != 0) {
        throw std::out_of_range("monomial outside ambient n=" + std::to_string(n_));
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Multivector& Multivector::operator+=(const Multivector& other) {
    check_same_ambient(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
    check_same_ambient(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Multivector& Multivector::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::map<std::pair<int, int>, Multivector> Multivector::by_bidegree() const {
    std::map<std::pair<int, int>, Multivector> out;
    for (const auto& [m, c] : terms_) {
        auto [it, _] = out.try_emplace({m.theta_degree(), m.xi_degree()}, n_);
        it->second.add_term(m, c);
    }
    return out;
}

std::string Multivector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += ' ';
        out += sgn(c) > 0 ? "+" : "-";
        out += Rational(abs(c)).get_str();
        for (int i = 1; i < n_; ++i)
            if (m.contains(Family::Theta, i)) out += " t" + std::to_string(i);
        for (int i = 1; i < n_; ++i)
            if (m.contains(Family::Xi, i)) out += " x" + std::to_string(i);
    }
    return out;
}

Multivector Multivector::parse(int n, std::string_view text) {
    Multivector out(n);
    std::istringstream in{std::string(text)};
    std::string tok;
    bool have_term = false;
    Rational coeff;
    Multivector term(n);
    auto flush = [&] {
        if (have_term) out += term * coeff;
        have_term = false;
    };
    auto as_generator = [&](const std::string& g) {
        if (g.size() < 2 || (g[0] != 't' && g[0] != 'x')) {
            throw std::invalid_argument("bad generator token '" + g + "'");
        }
        std::size_t used = 0;
        int idx = 0;
        try {
            idx = std::stoi(g.substr(1), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad generator token '" + g + "'");
        }
        if (used + 1 != g.size()) throw std::invalid_argument("bad generator token '" + g + "'");
        return generator(n, g[0] == 't' ? Family::Theta : Family::Xi, idx);
    };
    while (in >> tok) {
        if (tok == "0" && !have_term) continue;
        if (tok[0] == '+' || tok[0] == '-') {
            flush();
            have_term = true;
            term = one(n);
            const std::string rest = tok.substr(1);
            const Rational sign = tok[0] == '-' ? -1 : 1;
            if (rest.empty()) {
                coeff = sign;
            } else if (std::isdigit(static_cast<unsigned char>(rest[0]))) {
                try {
                    coeff = Rational(rest);
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad coefficient '" + tok + "'");
                }
                coeff.canonicalize();
                coeff *= sign;
            } else {
                coeff = sign;
                term = wedge(term, as_generator(rest));
            }
        } else {
            if (!have_term) {
                have_term = true;
                term = one(n);
                coeff = 1;
            }
            term = wedge(term, as_generator(tok));
        }
    }
    flush();
    return out;
}

// ---------------------------------------------------------------------------
// Operations

Multivector wedge(const Multivector& f, const Multivector& g) {
    check_same_ambient(f, g);
    Multivector out(f.n());
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            const int s = monomial_product_sign(a, b);
            if (s == 0) continue;
            out.add_term(Monomial::from_key(a.key() | b.key()), s > 0 ? Rational(ca * cb) : Rational(-ca * cb));
        }
    }
    return out;
}

Multivector contract(int index, Family family, const Multivector& f) {
    check_index(f.n(), index);
    const std::uint64_t bit = bit_of(family, index);
    Multivector out(f.n());
    for (const auto& [m, c] : f.terms()) {
        const std::uint64_t k = m.key();
        if ((k & bit) == 0) continue;
        const bool odd = std::popcount(k & (bit - 1)) % 2 != 0;
        out.add_term(Monomial::from_key(k & ~bit), odd ? Rational(-c) : c);
    }
    return out;
}

Multivector multiply_generator(int index, Family family, const Multivector& f) {
    check_index(f.n(), index);
    const std::uint64_t bit = bit_of(family, index);
    Multivector out(f.n());
    for (const auto& [m, c] : f.terms()) {
        const std::uint64_t k = m.key();
        if ((k & bit) != 0) continue;
        const bool odd = std::popcount(k & (bit - 1)) % 2 != 0;
        out.add_term(Monomial::from_key(k | bit), odd ? Rational(-c) : c);
    }
    return out;
}

Rational inner_product(const Multivector& f, const Multivector& g) {
    check_same_ambient(f, g);
    Rational sum = 0;
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& large = f.size() <= g.size() ? g : f;
    for (const auto& [m, c] : small.terms()) {
        auto it = large.terms().find(m);
        if (it != large.terms().end()) sum += c * it->second;
    }
    return sum;
}

Multivector apply_perm(const Permutation& sigma, const Multivector& f) {
    if (sigma.size() != f.n() - 1) {
        throw AmbientMismatch("permutation of degree " + std::to_string(sigma.size()) +
                              " applied over n=" + std::to_string(f.n()));
    }
    Multivector out(f.n());
    for (const auto& [m, c] : f.terms()) {
        const auto [t, st] = permute_bits(sigma, m.theta());
        const auto [x, sx] = permute_bits(sigma, m.xi());
        out.add_term(Monomial(t, x), st * sx > 0 ? c : Rational(-c));
    }
    return out;
}

void for_each_young_element(const std::vector<int>& composition,
                            const std::function<void(const Permutation&)>& fn) {
    int total = 0;
    for (int part : composition) {
        if (part <= 0) throw std::invalid_argument("composition parts must be positive");
        total += part;
    }
    std::vector<int> word = Permutation::identity(total).word();
    std::vector<int> starts;
    for (int s = 0; int part : composition) {
        starts.push_back(s);
        s += part;
    }
    // Odometer over the blocks, each cycling through its permutations in lex order.
    std::function<void(std::size_t)> rec = [&](std::size_t block) {
        if (block == composition.size()) {
            fn(Permutation(word));
            return;
        }
        auto first = word.begin() + starts[block];
        auto last = first + composition[block];
        std::sort(first, last);
        do {
            rec(block + 1);
        } while (std::next_permutation(first, last));
    };
    rec(0);
}

Multivector symmetrize(const std::vector<int>& composition, bool is_signed, const Multivector& f) {
    const int total = std::accumulate(composition.begin(), composition.end(), 0);
    if (total != f.n() - 1) {
        throw std::invalid_argument("composition sums to " + std::to_string(total) +
                                    ", expected " + std::to_string(f.n() - 1));
    }
    Multivector out(f.n());
    for_each_young_element(composition, [&](const Permutation& w) {
        Multivector image = apply_perm(w, f);
        if (is_signed && w.sign() < 0) image *= -1;
        out += image;
    });
    return out;
}

// ---------------------------------------------------------------------------
// 2n-generator model

void FullMultivector::add_term(Monomial m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

FullMultivector FullMultivector::generator(int n, Family family, int index) {
    if (index < 1 || index > n || n >= kMaxN) throw std::out_of_range("generator index out of range");
    FullMultivector g(n);
    g.add_term(Monomial::generator(family, index), 1);
    return g;
}

FullMultivector operator+(FullMultivector a, const FullMultivector& b) {
    if (a.n_ != b.n_) throw AmbientMismatch("ambient mismatch in 2n-generator algebra");
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
}

FullMultivector full_wedge(const FullMultivector& a, const FullMultivector& b) {
    if (a.n_ != b.n_) throw AmbientMismatch("ambient mismatch in 2n-generator algebra");
    FullMultivector out(a.n_);
    for (const auto& [x, cx] : a.terms_)
        for (const auto& [y, cy] : b.terms_) {
            const int s = monomial_product_sign(x, y);
            if (s != 0) out.add_term(Monomial::from_key(x.key() | y.key()), s > 0 ? Rational(cx * cy) : Rational(-cx * cy));
        }
    return out;
}

Multivector substitute_from_2n(const FullMultivector& g) {
    const int n = g.n();
    Multivector theta_sum(n);
    Multivector xi_sum(n);
    for (int i = 1; i < n; ++i) {
        theta_sum += Multivector::generator(n, Family::Theta, i);
        xi_sum += Multivector::generator(n, Family::Xi, i);
    }
    const Rational inv_n(1, n);
    auto image = [&](Family family, int i) {
        if (family == Family::Theta) {
            return i < n ? Multivector::generator(n, Family::Theta, i) : -theta_sum;
        }
        Multivector shift = xi_sum * Rational(-inv_n);
        return i < n ? Multivector::generator(n, Family::Xi, i) + shift : shift;
    };
    Multivector out(n);
    for (const auto& [m, c] : g.terms()) {
        Multivector prod = Multivector::one(n);
        for (int i = 1; i <= n; ++i)
            if (m.contains(Family::Theta, i)) prod = wedge(prod, image(Family::Theta, i));
        for (int i = 1; i <= n; ++i)
            if (m.contains(Family::Xi, i)) prod = wedge(prod, image(Family::Xi, i));
        out += prod * c;
    }
    return out;
}

}  // namespace fdr
