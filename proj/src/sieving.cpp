#include "fdr/sieving.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace fdr {

QPolynomial::QPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(const Integer& c) { return QPolynomial({c}); }

QPolynomial QPolynomial::monomial(int e, const Integer& c) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    std::vector<Integer> v(static_cast<std::size_t>(e + 1));
    v.back() = c;
    return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer QPolynomial::coefficient(int e) const {
    return e >= 0 && e < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(e)] : Integer(0);
}

Integer QPolynomial::at_one() const {
    Integer s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

bool QPolynomial::nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c >= 0; });
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != 0)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::dilate(int k) const {
    if (k < 1) throw std::invalid_argument("dilation factor must be positive");
    if (is_zero()) return {};
    std::vector<Integer> v(static_cast<std::size_t>(degree() * k + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(k)] = c_[i];
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::mod_qm_minus_1(int m) const {
    if (m < 1) throw std::invalid_argument("modulus exponent must be positive");
    std::vector<Integer> v(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i % static_cast<std::size_t>(m)] += c_[i];
    return QPolynomial(std::move(v));
}

std::string QPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t e = 0; e < c_.size(); ++e) {
        const Integer& c = c_[e];
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        const bool show = e == 0 || mag != 1;
        if (show) s += mag.get_str();
        if (e >= 1) s += "q";
        if (e >= 2) s += "^" + std::to_string(e);
    }
    return s;
}

namespace {

std::pair<QPolynomial, QPolynomial> long_divide(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Integer> rem = num.coeffs();
    const int dd = den.degree();
    const Integer& lead = den.coeffs().back();
    std::vector<Integer> quot(rem.size() > static_cast<std::size_t>(dd) ? rem.size() - static_cast<std::size_t>(dd) : 0);
    for (int e = static_cast<int>(rem.size()) - 1; e >= dd; --e) {
        const Integer& top = rem[static_cast<std::size_t>(e)];
        if (top == 0) continue;
        if (top % lead != 0) throw InexactDivision("non-integral quotient coefficient");
        const Integer f = top / lead;
        quot[static_cast<std::size_t>(e - dd)] = f;
        for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(e - dd + i)] -= f * den.coeffs()[static_cast<std::size_t>(i)];
    }
    return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

}  // namespace

QPolynomial divide_exact(const QPolynomial& num, const QPolynomial& den) {
    auto [q, r] = long_divide(num, den);
    if (!r.is_zero()) throw InexactDivision("nonzero remainder " + r.to_string());
    return q;
}

QPolynomial remainder_monic(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero() || abs(den.coeffs().back()) != 1) throw std::invalid_argument("divisor must be monic");
    return long_divide(num, den).second;
}

QPolynomial q_int(int m) {
    if (m < 0) throw std::invalid_argument("q_int needs m >= 0");
    return QPolynomial(std::vector<Integer>(static_cast<std::size_t>(m), Integer(1)));
}

QPolynomial q_factorial(int m) {
    if (m < 0) throw std::invalid_argument("q_factorial needs m >= 0");
    QPolynomial f = QPolynomial::constant(1);
    for (int i = 1; i <= m; ++i) f = f * q_int(i);
    return f;
}

QPolynomial q_binomial(int m, int k) {
    if (k < 0 || k > m) return {};
    return divide_exact(q_factorial(m), q_factorial(k) * q_factorial(m - k));
}

QPolynomial q_multinomial(int m, const std::vector<int>& parts) {
    int sum = 0;
    QPolynomial den = QPolynomial::constant(1);
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("negative multinomial part");
        sum += p;
        den = den * q_factorial(p);
    }
    if (sum != m) throw std::invalid_argument("multinomial parts must sum to m");
    return divide_exact(q_factorial(m), den);
}

QPolynomial q_catalan(int m) {
    if (m < 0) throw std::invalid_argument("q_catalan needs m >= 0");
    return divide_exact(q_binomial(2 * m, m), q_int(m + 1));
}

QPolynomial cyclotomic(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
    static std::mutex mutex;
    static std::map<int, QPolynomial> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(m); it != memo.end()) return it->second;
    }
    QPolynomial p = QPolynomial::monomial(m) - QPolynomial::constant(1);
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide_exact(p, cyclotomic(d));
    std::lock_guard lock(mutex);
    return memo.emplace(m, p).first->second;
}

QPolynomial fake_degree(const IntPartition& lambda) {
    int b = 0;
    for (int i = 0; i < lambda.length(); ++i) b += i * lambda.part(i);
    const IntPartition conj = lambda.conjugate();
    QPolynomial den = QPolynomial::constant(1);
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.part(r); ++c) den = den * q_int(lambda.part(r) - c + conj.part(c) - r - 1);
    return QPolynomial::monomial(b) * divide_exact(q_factorial(lambda.weight()), den);
}

QPolynomial fake_degree(const SchurExpansion& f) {
    QPolynomial out;
    for (const auto& [lambda, c] : f.terms()) out += QPolynomial::constant(Integer(static_cast<long>(c))) * fake_degree(lambda);
    return out;
}

QPolynomial fd_top(int n) {
    if (n < 2) throw std::invalid_argument("fd_top needs n >= 2");
    auto choose2 = [](int a) { return a * (a - 1) / 2; };
    QPolynomial out;
    const int m = n - 1;
    for (int k = 0; 2 * k <= m; ++k)
        for (int x = 0; 2 * k + x <= m; ++x) {
            const int y = m - 2 * k - x;
            out += q_multinomial(m, {2 * k, x, y}) * q_catalan(k) * QPolynomial::monomial(k + choose2(x) + choose2(y));
        }
    return out;
}

QPolynomial theorem_polynomial(int n) { return QPolynomial::monomial(n * (n - 1) / 2) * fd_top(n); }

std::vector<LabeledPartition> x_set(int n) {
    EnumerateFilter f;
    f.n_block_size = 1;
    return enumerate(n, f);
}

LabeledPartition rotate(const LabeledPartition& pi) {
    if (pi.n_block().size() != 1) throw std::invalid_argument("rotate expects n alone in its block");
    LabeledPartition out = apply_perm_partition(Permutation::long_cycle(pi.n() - 1), pi);
    if (!is_noncrossing(out)) throw std::logic_error("rotation produced a crossing");
    return out;
}

std::vector<std::vector<LabeledPartition>> rotation_orbits(int n) {
    std::vector<std::vector<LabeledPartition>> orbits;
    std::set<LabeledPartition> seen;
    for (const auto& pi : x_set(n)) {
        if (seen.count(pi)) continue;
        std::vector<LabeledPartition> orbit;
        LabeledPartition cur = pi;
        do {
            orbit.push_back(cur);
            seen.insert(cur);
            cur = rotate(cur);
        } while (cur != pi);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

bool CspReport::ok() const {
    return congruence && std::all_of(rows.begin(), rows.end(), [](const CspRow& r) { return r.matches; });
}

CspReport csp_check(int n, const QPolynomial& p) {
    if (n < 2) throw std::invalid_argument("csp_check needs n >= 2");
    const int order = n - 1;
    CspReport rep;
    rep.n = n;
    rep.polynomial = p;
    rep.reduced = p.mod_qm_minus_1(order);
    const auto orbits = rotation_orbits(n);
    for (const auto& o : orbits) {
        const int size = static_cast<int>(o.size());
        rep.orbit_polynomial += q_int(size).dilate(order / size);
    }
    rep.orbit_polynomial = rep.orbit_polynomial.mod_qm_minus_1(order);
    rep.congruence = rep.reduced == rep.orbit_polynomial;
    for (int d = 0; d < order; ++d) {
        CspRow row;
        row.d = d;
        // Orbit of size s is pointwise fixed by c^d exactly when s divides d.
        for (const auto& o : orbits)
            if (d % static_cast<int>(o.size()) == 0) row.fixed += o.size();
        const int m = order / std::gcd(d, order);
        row.residue = remainder_monic(p, cyclotomic(m));
        row.matches = row.residue == QPolynomial::constant(Integer(static_cast<unsigned long>(row.fixed)));
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Problem1Report problem1_check(int n) {
    Problem1Report rep;
    rep.n = n;
    rep.lhs = theorem_polynomial(n);
    rep.rhs = q_catalan(n);
    const QPolynomial diff = rep.lhs - rep.rhs;
    rep.remainder_n_minus_1 = diff.mod_qm_minus_1(n - 1);
    rep.remainder_n = diff.mod_qm_minus_1(n);
    return rep;
}

}  // namespace fdr
