#pragma once
// qpoly.hpp - Exact Laurent polynomials in q with arbitrary-precision
// integer coefficients, and the closed-form q-quantities built on them
// (q-integers, q-factorials, gaussian binomials, super Catalan polynomials,
// q-Ballot numbers).
//
// Representation: dense coefficient vector plus a signed minimum exponent,
// so q^-3 and friends are first-class values. Canonical form: the first and
// last stored coefficients are nonzero; the zero polynomial is the unique
// value with an empty coefficient vector and min_deg == 0.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcatalan {

using BigInt = boost::multiprecision::cpp_int;

/// Parameters outside an operation's stated domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A condition the underlying mathematics guarantees was violated;
/// always an implementation bug, never a data error.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

class QPoly {
public:
    QPoly() = default;

    /// Constant polynomial.
    explicit QPoly(BigInt c) {
        if (c != 0) {
            min_deg_ = 0;
            coeffs_.push_back(std::move(c));
        }
    }
    explicit QPoly(long long c) : QPoly(BigInt(c)) {}

    /// Builds from a dense coefficient run starting at exponent min_deg;
    /// trims to canonical form.
    static QPoly from_coeffs(int min_deg, std::vector<BigInt> coeffs) {
        QPoly p;
        p.min_deg_ = min_deg;
        p.coeffs_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    static QPoly from_coeffs(int min_deg, std::initializer_list<long long> coeffs) {
        std::vector<BigInt> cs;
        cs.reserve(coeffs.size());
        for (long long c : coeffs) cs.emplace_back(c);
        return from_coeffs(min_deg, std::move(cs));
    }

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(BigInt(1)); }

    /// coeff * q^exp
    static QPoly monomial(BigInt coeff, int exp) {
        QPoly p;
        if (coeff != 0) {
            p.min_deg_ = exp;
            p.coeffs_.push_back(std::move(coeff));
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Exponent of the lowest term. Zero polynomial reports 0.
    int min_deg() const { return min_deg_; }

    /// Exponent of the highest term; requires a nonzero polynomial.
    int degree() const {
        if (is_zero()) throw DomainError("degree() of the zero polynomial");
        return min_deg_ + static_cast<int>(coeffs_.size()) - 1;
    }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// Coefficient of q^exp (0 outside the stored range).
    BigInt coeff(int exp) const {
        long long i = static_cast<long long>(exp) - min_deg_;
        if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return BigInt(0);
        return coeffs_[static_cast<size_t>(i)];
    }

    bool operator==(const QPoly& o) const {
        return min_deg_ == o.min_deg_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this + (-o); }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.min_deg_, b.min_deg_);
        int hi = std::max(a.degree(), b.degree());
        std::vector<BigInt> cs(static_cast<size_t>(hi - lo + 1));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            cs[static_cast<size_t>(a.min_deg_ - lo) + i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            cs[static_cast<size_t>(b.min_deg_ - lo) + i] += b.coeffs_[i];
        return from_coeffs(lo, std::move(cs));
    }

    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<BigInt> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return from_coeffs(a.min_deg_ + b.min_deg_, std::move(cs));
    }

    friend QPoly operator*(const QPoly& a, const BigInt& s) {
        return a * QPoly(s);
    }

private:
    void normalize() {
        size_t lo = 0;
        while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
        size_t hi = coeffs_.size();
        while (hi > lo && coeffs_[hi - 1] == 0) --hi;
        if (lo == hi) {
            coeffs_.clear();
            min_deg_ = 0;
            return;
        }
        if (lo > 0 || hi < coeffs_.size()) {
            std::vector<BigInt> trimmed(coeffs_.begin() + static_cast<long>(lo),
                                        coeffs_.begin() + static_cast<long>(hi));
            coeffs_ = std::move(trimmed);
            min_deg_ += static_cast<int>(lo);
        }
    }

    int min_deg_ = 0;
    std::vector<BigInt> coeffs_;  // coeffs_[i] is the coefficient of q^(min_deg_+i)
};

/// Multiplies by q^k; k may be negative.
inline QPoly shift(const QPoly& a, int k) {
    if (a.is_zero()) return a;
    return QPoly::from_coeffs(a.min_deg() + k, a.coeffs());
}

/// Signals that exact_div was asked to divide a by b when b does not
/// divide a over the integers. Carries the long-division remainder
/// (exact for divisors with unit leading coefficient).
class NotDivisibleError : public std::runtime_error {
public:
    NotDivisibleError(std::string msg, QPoly remainder)
        : std::runtime_error(std::move(msg)), remainder_(std::move(remainder)) {}
    const QPoly& remainder() const { return remainder_; }

private:
    QPoly remainder_;
};

namespace detail {

struct DivResult {
    QPoly quotient;
    QPoly remainder;  // nonzero (or ill-defined quotient) means not divisible
    bool exact = false;
};

// Long division over the integers, descending exponents. Laurent inputs are
// handled by factoring out q^min_deg from both sides first. A non-exact
// leading-coefficient division proves there is no integer quotient, so we
// stop there and report whatever remains.
inline DivResult divide(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return {QPoly(), QPoly(), true};

    const int shift_out = a.min_deg() - b.min_deg();
    std::vector<BigInt> rem = a.coeffs();
    const std::vector<BigInt>& div = b.coeffs();
    const BigInt& lead = div.back();

    long long qlen = static_cast<long long>(rem.size()) - static_cast<long long>(div.size()) + 1;
    if (qlen <= 0)
        return {QPoly(), a, false};

    std::vector<BigInt> quot(static_cast<size_t>(qlen));
    for (long long i = qlen - 1; i >= 0; --i) {
        BigInt& top = rem[static_cast<size_t>(i) + div.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            return {QPoly(), QPoly::from_coeffs(a.min_deg(), std::move(rem)), false};
        BigInt c = top / lead;
        for (size_t j = 0; j < div.size(); ++j)
            rem[static_cast<size_t>(i) + j] -= c * div[j];
        quot[static_cast<size_t>(i)] = std::move(c);
    }
    QPoly r = QPoly::from_coeffs(a.min_deg(), std::move(rem));
    if (!r.is_zero())
        return {QPoly(), r, false};
    return {QPoly::from_coeffs(shift_out, std::move(quot)), QPoly(), true};
}

}  // namespace detail

/// Quotient a/b when b divides a exactly over the integers.
/// The failure path is a legitimate outcome (it is the polynomiality test
/// for T_q), reported as NotDivisibleError.
inline QPoly exact_div(const QPoly& a, const QPoly& b) {
    auto d = detail::divide(a, b);
    if (!d.exact)
        throw NotDivisibleError("polynomial division is not exact", d.remainder);
    return d.quotient;
}

/// Same as exact_div but with nullopt instead of a throw.
inline std::optional<QPoly> try_exact_div(const QPoly& a, const QPoly& b) {
    auto d = detail::divide(a, b);
    if (!d.exact) return std::nullopt;
    return d.quotient;
}

/// [r]_q = 1 + q + ... + q^(r-1); [0]_q = 0.
inline QPoly q_int(int r) {
    if (r < 0) throw DomainError("q_int: r must be nonnegative");
    return QPoly::from_coeffs(0, std::vector<BigInt>(static_cast<size_t>(r), BigInt(1)));
}

/// [n]!_q = [1]_q [2]_q ... [n]_q; empty product for n = 0.
inline QPoly q_factorial(int n) {
    if (n < 0) throw DomainError("q_factorial: n must be nonnegative");
    QPoly p = QPoly::one();
    for (int r = 2; r <= n; ++r) p *= q_int(r);
    return p;
}

namespace detail {

// Table of [0]!_q .. [n]!_q, built incrementally. The closed-form quantities
// below take one of these when a caller computes many values in a sweep.
class QFactorials {
public:
    explicit QFactorials(int n_max) {
        table_.reserve(static_cast<size_t>(n_max) + 1);
        table_.push_back(QPoly::one());
        for (int r = 1; r <= n_max; ++r) table_.push_back(table_.back() * q_int(r));
    }
    const QPoly& operator()(int n) const { return table_.at(static_cast<size_t>(n)); }

private:
    std::vector<QPoly> table_;
};

inline QPoly gaussian_binomial_impl(int n, int k, const QFactorials& fact) {
    if (k < 0 || k > n) return QPoly::zero();
    return exact_div(fact(n), fact(k) * fact(n - k));
}

inline QPoly super_catalan_q_impl(int m, int n, const QFactorials& fact) {
    auto q = try_exact_div(fact(2 * m) * fact(2 * n), fact(m) * fact(n) * fact(m + n));
    if (!q)
        throw InvariantViolation("S_q(m,n) failed to be a polynomial");
    return *q;
}

inline QPoly one_plus_q_pow(int n) {
    QPoly p = QPoly::one();
    p += QPoly::monomial(BigInt(1), n);
    return p;
}

inline QPoly super_catalan_t_q_impl(int m, int n, const QFactorials& fact) {
    if (n < 1) throw DomainError("T_q(m,n): n must be >= 1");
    auto q = try_exact_div(super_catalan_q_impl(m, n, fact), one_plus_q_pow(n));
    if (!q)
        throw InvariantViolation("S_q(m,n)/(1+q^n) failed to be a polynomial");
    return *q;
}

inline QPoly ballot_q_impl(int n, int r, const QFactorials& fact) {
    if (r < 1 || r > n) throw DomainError("B_q(n,r): requires 1 <= r <= n");
    return exact_div(fact(2 * n - 1) * q_int(2 * r), fact(n + r) * fact(n - r));
}

inline QPoly ballot_q_binomial_form_impl(int n, int r, const QFactorials& fact) {
    if (r < 1 || r > n) throw DomainError("B_q(n,r): requires 1 <= r <= n");
    QPoly diff = gaussian_binomial_impl(2 * n - 1, n + r - 1, fact) -
                 gaussian_binomial_impl(2 * n - 1, n + r, fact);
    return shift(diff, -(n - r));
}

}  // namespace detail

/// [n choose k]_q; zero when k is out of range.
inline QPoly gaussian_binomial(int n, int k) {
    if (n < 0) throw DomainError("gaussian_binomial: n must be nonnegative");
    return detail::gaussian_binomial_impl(n, k, detail::QFactorials(n));
}

/// S_q(m,n) = [2m]!_q [2n]!_q / ([m]!_q [n]!_q [m+n]!_q).
inline QPoly super_catalan_q(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("S_q(m,n): m, n must be nonnegative");
    return detail::super_catalan_q_impl(m, n, detail::QFactorials(2 * std::max(m, n)));
}

/// T_q(m,n) = S_q(m,n) / (1 + q^n); requires n >= 1 so the divisor is a
/// genuine binomial (at n = 0 it degenerates to the integer 2).
inline QPoly super_catalan_t_q(int m, int n) {
    if (m < 0) throw DomainError("T_q(m,n): m must be nonnegative");
    if (n < 1) throw DomainError("T_q(m,n): n must be >= 1");
    return detail::super_catalan_t_q_impl(m, n, detail::QFactorials(2 * std::max(m, n)));
}

/// B_q(n,r) = [2n-1]!_q [2r]_q / ([n+r]!_q [n-r]!_q), for 1 <= r <= n.
inline QPoly ballot_q(int n, int r) {
    if (r < 1 || r > n) throw DomainError("B_q(n,r): requires 1 <= r <= n");
    return detail::ballot_q_impl(n, r, detail::QFactorials(2 * n));
}

/// The companion closed form
/// q^-(n-r) * ([2n-1 choose n+r-1]_q - [2n-1 choose n+r]_q).
inline QPoly ballot_q_binomial_form(int n, int r) {
    if (r < 1 || r > n) throw DomainError("B_q(n,r): requires 1 <= r <= n");
    return detail::ballot_q_binomial_form_impl(n, r, detail::QFactorials(2 * n));
}

inline bool is_nonnegative(const QPoly& a) {
    for (const auto& c : a.coeffs())
        if (c < 0) return false;
    return true;
}

/// True iff the dense coefficient run weakly increases then weakly
/// decreases. Internal zeros count: 1 + q^2 reads 1,0,1 and is not unimodal.
inline bool is_unimodal(const QPoly& a) {
    if (a.is_zero()) throw DomainError("is_unimodal: zero polynomial");
    const auto& cs = a.coeffs();
    size_t i = 1;
    while (i < cs.size() && cs[i - 1] <= cs[i]) ++i;
    while (i < cs.size() && cs[i - 1] >= cs[i]) ++i;
    return i == cs.size();
}

/// Sum of coefficients: the classical quantity the q-analog deforms.
inline BigInt eval_at_one(const QPoly& a) {
    BigInt s = 0;
    for (const auto& c : a.coeffs()) s += c;
    return s;
}

/// "1 + 2*q + q^3" style rendering, ascending exponents.
inline std::string to_string(const QPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        const BigInt& c = a.coeffs()[i];
        if (c == 0) continue;
        int exp = a.min_deg() + static_cast<int>(i);
        BigInt abs_c = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (exp == 0) {
            out << abs_c.str();
        } else {
            if (abs_c != 1) out << abs_c.str() << "*";
            out << "q";
            if (exp != 1) out << "^" << exp;
        }
    }
    return out.str();
}

/// Quotient of two QPoly values with a nonzero denominator. No gcd
/// reduction happens anywhere; equality is cross-multiplication.
class PolyFraction {
public:
    PolyFraction() : num_(QPoly::zero()), den_(QPoly::one()) {}
    explicit PolyFraction(QPoly num) : num_(std::move(num)), den_(QPoly::one()) {}
    PolyFraction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("PolyFraction: zero denominator");
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    // a/b == c/d  iff  a*d == c*b
    friend bool operator==(const PolyFraction& a, const PolyFraction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const PolyFraction& a, const PolyFraction& b) { return !(a == b); }

private:
    QPoly num_;
    QPoly den_;
};

}  // namespace qcatalan
