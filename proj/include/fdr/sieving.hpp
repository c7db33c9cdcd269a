#pragma once

// q-analogs, fake degrees and cyclic sieving on X_n (partitions whose n-block is {n})
// under the long cycle c = (1 2 ... n-1).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdr/exterior.hpp"
#include "fdr/partitions.hpp"
#include "fdr/symfunc.hpp"

namespace fdr {

/// Dense integer polynomial in q, lowest degree first, trailing zeros trimmed.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Integer> coeffs);
    static QPolynomial constant(const Integer& c);
    /// c q^e
    static QPolynomial monomial(int e, const Integer& c = 1);

    const std::vector<Integer>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Integer coefficient(int e) const;
    Integer at_one() const;
    bool nonnegative() const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// Substitutes q -> q^k.
    QPolynomial dilate(int k) const;
    /// Folds exponents modulo m: P mod (q^m - 1).
    QPolynomial mod_qm_minus_1(int m) const;

    /// "1 + q + 2q^2", or "0".
    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> c_;
};

struct InexactDivision : std::logic_error {
    using std::logic_error::logic_error;
};

/// Quotient of exact division over Z; throws InexactDivision unless num = q * den with q integral.
QPolynomial divide_exact(const QPolynomial& num, const QPolynomial& den);
/// Remainder modulo a monic divisor.
QPolynomial remainder_monic(const QPolynomial& num, const QPolynomial& den);

QPolynomial q_int(int m);
QPolynomial q_factorial(int m);
QPolynomial q_binomial(int m, int k);
QPolynomial q_multinomial(int m, const std::vector<int>& parts);
QPolynomial q_catalan(int m);
/// The m-th cyclotomic polynomial.
QPolynomial cyclotomic(int m);

/// q^{b(lambda)} [|lambda|]_q! / prod over cells [hook]_q.
QPolynomial fake_degree(const IntPartition& lambda);
QPolynomial fake_degree(const SchurExpansion& f);

/// sum over 2k+x+y = n-1 of [n-1; 2k, x, y]_q C_k(q) q^{k + C(x,2) + C(y,2)}.
QPolynomial fd_top(int n);

/// q^{C(n,2)} fd_top(n).
QPolynomial theorem_polynomial(int n);

/// Partitions with n-block {n}, in serialization order.
std::vector<LabeledPartition> x_set(int n);
LabeledPartition rotate(const LabeledPartition& pi);
/// Orbits of c on X_n, each listed from its least element under serialization order.
std::vector<std::vector<LabeledPartition>> rotation_orbits(int n);

struct CspRow {
    int d = 0;
    std::uint64_t fixed = 0;
    /// P(zeta^d) equals fixed (tested by P - fixed = 0 mod the minimal polynomial of zeta^d).
    bool matches = false;
    /// P mod Phi_M for M = order of zeta^d.
    QPolynomial residue;
};

struct CspReport {
    int n = 0;
    QPolynomial polynomial;
    QPolynomial reduced;         ///< polynomial mod q^{n-1} - 1
    QPolynomial orbit_polynomial; ///< sum over orbits O of [|O|]_{q^{(n-1)/|O|}}
    bool congruence = false;     ///< reduced == orbit_polynomial mod q^{n-1} - 1
    std::vector<CspRow> rows;
    bool ok() const;
};

CspReport csp_check(int n, const QPolynomial& p);

struct Problem1Report {
    int n = 0;
    QPolynomial lhs;  ///< q^{C(n,2)} fd_top(n)
    QPolynomial rhs;  ///< C_n(q)
    QPolynomial remainder_n_minus_1;
    QPolynomial remainder_n;
    bool zero_mod_n_minus_1() const { return remainder_n_minus_1.is_zero(); }
    bool zero_mod_n() const { return remainder_n.is_zero(); }
};

Problem1Report problem1_check(int n);

}  // namespace fdr
