#pragma once

// Exact sparse exterior algebra on theta_1..theta_{n-1}, xi'_1..xi'_{n-1}.
//
// A monomial is stored as two bit sets.  Its canonical written order is all
// thetas ascending, then all xi's ascending; every stored coefficient sign is
// relative to that order.  Internally the two sets are packed into one 64-bit
// key (thetas in the low word, xi's in the high word) so that the bit order
// coincides with the canonical order and product signs are popcount parities.

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fdr {

using Rational = mpq_class;
using Integer = mpz_class;

/// Largest supported n.  Sets of [n-1] must fit a 32-bit word.
inline constexpr int kMaxN = 32;

enum class Family : std::uint8_t { Theta, Xi };

class Monomial {
public:
    constexpr Monomial() = default;
    constexpr Monomial(std::uint32_t theta, std::uint32_t xi) : theta_(theta), xi_(xi) {}

    static constexpr Monomial from_key(std::uint64_t key) {
        return Monomial(static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32));
    }
    /// Single generator; indices are 1-based.
    static constexpr Monomial generator(Family family, int index) {
        const std::uint32_t bit = std::uint32_t{1} << (index - 1);
        return family == Family::Theta ? Monomial(bit, 0) : Monomial(0, bit);
    }

    constexpr std::uint32_t theta() const { return theta_; }
    constexpr std::uint32_t xi() const { return xi_; }
    constexpr std::uint64_t key() const {
        return std::uint64_t{theta_} | (std::uint64_t{xi_} << 32);
    }
    constexpr int theta_degree() const { return std::popcount(theta_); }
    constexpr int xi_degree() const { return std::popcount(xi_); }
    constexpr int degree() const { return theta_degree() + xi_degree(); }
    constexpr bool contains(Family family, int index) const {
        const std::uint32_t bit = std::uint32_t{1} << (index - 1);
        return ((family == Family::Theta ? theta_ : xi_) & bit) != 0;
    }

    friend constexpr bool operator==(Monomial, Monomial) = default;
    friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
        return a.key() <=> b.key();
    }

private:
    std::uint32_t theta_ = 0;
    std::uint32_t xi_ = 0;
};

/// Sign (+1/-1) of a.b rewritten in canonical order, or 0 if they share a generator.
int monomial_product_sign(Monomial a, Monomial b);

/// Lexicographic term order for variable order theta_1 > xi'_1 > theta_2 > xi'_2 > ...
/// Returns true when a is strictly larger than b.  Meaningful for equal-degree monomials.
bool lex_greater(Monomial a, Monomial b);

/// A permutation of [m] in one-line notation (1-based images).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int m);
    /// Product of the given cycles on [m].
    static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);
    /// The long cycle 1 -> 2 -> ... -> m -> 1.
    static Permutation long_cycle(int m);
    /// Parses "2 1 3" (one-line) or "(3 5 7 6)(1 2)" (cycles, m required).
    static Permutation parse(std::string_view text, int m);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }
    int sign() const;
    Permutation inverse() const;
    /// (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

/// Number of inversions of an integer word.
int inversions(const std::vector<int>& word);

/// Sparse exact linear combination of monomials over ambient n (n-1 generators per family).
class Multivector {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit Multivector(int n = 2);
    Multivector(int n, Monomial m, Rational c = 1);

    static Multivector zero(int n) { return Multivector(n); }
    static Multivector one(int n) { return Multivector(n, Monomial{}); }
    static Multivector generator(int n, Family family, int index);
    /// theta_1 theta_2 ... theta_{n-1}.
    static Multivector top_theta(int n);
    /// D = theta_1 xi'_1 + ... + theta_{n-1} xi'_{n-1}.
    static Multivector diagonal(int n);
    /// Parses the text format, e.g. "+2 t1 t3 x2 -1/2 x1 +1".  Generators in a
    /// term may appear in any order; the term is re-sorted with its sign.
    static Multivector parse(int n, std::string_view text);

    int n() const { return n_; }
    int vars() const { return n_ - 1; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(Monomial m) const;

    /// Adds c*m, dropping the entry if it cancels.
    void add_term(Monomial m, const Rational& c);

    Multivector& operator+=(const Multivector& other);
    Multivector& operator-=(const Multivector& other);
    Multivector& operator*=(const Rational& c);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const Rational& c) { return a *= c; }
    friend Multivector operator*(const Rational& c, Multivector a) { return a *= c; }
    Multivector operator-() const { return *this * Rational(-1); }

    friend bool operator==(const Multivector&, const Multivector&) = default;

    /// Homogeneous (theta, xi) bidegree components.
    std::map<std::pair<int, int>, Multivector> by_bidegree() const;

    std::string to_string() const;

private:
    int n_;
    Terms terms_;
};

/// Thrown whenever two operands live over different ambient sizes.
struct AmbientMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Multivector wedge(const Multivector& f, const Multivector& g);

/// Left contraction: deletes the generator at canonical position j with sign (-1)^(j-1).
Multivector contract(int index, Family family, const Multivector& f);

/// Left exterior multiplication by a single generator.
Multivector multiply_generator(int index, Family family, const Multivector& f);

Rational inner_product(const Multivector& f, const Multivector& g);

/// theta_i -> theta_sigma(i), xi'_i -> xi'_sigma(i); sigma must act on [n-1].
Multivector apply_perm(const Permutation& sigma, const Multivector& f);

/// Calls fn on every element of the Young subgroup of S_{sum(composition)}
/// on consecutive index blocks.
void for_each_young_element(const std::vector<int>& composition,
                            const std::function<void(const Permutation&)>& fn);

/// Sum over the Young subgroup of w.f (weighted by sign(w) when signed).
Multivector symmetrize(const std::vector<int>& composition, bool is_signed, const Multivector& f);

/// Element of the 2n-generator algebra on theta_1..theta_n, xi_1..xi_n.
/// Same packing as Monomial but with n generators per family.
class FullMultivector {
public:
    explicit FullMultivector(int n) : n_(n) {}
    int n() const { return n_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    void add_term(Monomial m, const Rational& c);
    static FullMultivector generator(int n, Family family, int index);
    friend FullMultivector operator+(FullMultivector a, const FullMultivector& b);
    friend FullMultivector full_wedge(const FullMultivector& a, const FullMultivector& b);

private:
    int n_;
    std::map<Monomial, Rational> terms_;
};

/// theta_n -> -(theta_1+...+theta_{n-1}),  xi_i -> xi'_i - (1/n) sum xi',
/// xi_n -> -(1/n) sum xi'; expanded exactly.
Multivector substitute_from_2n(const FullMultivector& g);

}  // namespace fdr
