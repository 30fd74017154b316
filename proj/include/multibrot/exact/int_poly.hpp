#pragma once

#include "multibrot/exact/integer.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multibrot::exact {

/// Dense univariate polynomial with integer coefficients, a_0 first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and `degree()` is -1 for it.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly constant(const BigInt& v) { return IntPoly(std::vector<BigInt>{v}); }
    static IntPoly monomial(const BigInt& v, std::size_t k) {
        std::vector<BigInt> c(k + 1);
        c[k] = v;
        return IntPoly(std::move(c));
    }
    /// The variable T.
    static IntPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    /// Coefficient of T^k (zero beyond the degree).
    BigInt operator[](std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
    const BigInt& lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const BigInt& trailing() const {
        if (c_.empty()) throw std::domain_error("zero polynomial");
        return c_.front();
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& a : c_) {
            g = gcd(g, a);
            if (g == 1) break;
        }
        return g;
    }

    /// Content 1 with positive leading coefficient.
    IntPoly primitive() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (lead() < 0) g = -g;
        std::vector<BigInt> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
        return IntPoly(std::move(out));
    }
    bool is_canonical() const { return !is_zero() && lead() > 0 && content() == 1; }

    IntPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return IntPoly(std::move(out));
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Rational eval(const Rational& x) const {
        // Homogenised Horner: sum a_k num^k den^(n-k), divided by den^n.
        if (is_zero()) return 0;
        const BigInt& num = x.get_num();
        const BigInt& den = x.get_den();
        BigInt acc = c_.back();
        BigInt dpow = 1;
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            dpow *= den;
            acc = acc * num + c_[i] * dpow;
        }
        return make_rational(acc, dpow);
    }

    /// Sign of P(x) without forming the reduced rational.
    int sign_at(const Rational& x) const {
        if (is_zero()) return 0;
        const BigInt& num = x.get_num();
        const BigInt& den = x.get_den();
        BigInt acc = c_.back();
        BigInt dpow = 1;
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            dpow *= den;
            acc = acc * num + c_[i] * dpow;
        }
        return sgn(acc);
    }

    double eval_double(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    }

    /// P(-T).
    IntPoly reflect() const {
        std::vector<BigInt> out = c_;
        for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
        return IntPoly(std::move(out));
    }
    /// T^n P(1/T).
    IntPoly reversed() const {
        std::vector<BigInt> out(c_.rbegin(), c_.rend());
        return IntPoly(std::move(out));
    }
    /// P(T + s).
    IntPoly taylor_shift(const BigInt& s) const {
        std::vector<BigInt> a = c_;
        const std::size_t n = a.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) a[j - 1] += s * a[j];
        return IntPoly(std::move(a));
    }
    /// 2^(k n) P(T / 2^k) for k >= 0 (scales roots by 2^k).
    IntPoly scale_roots_pow2(unsigned long k) const {
        std::vector<BigInt> a = c_;
        const std::size_t n = a.size();
        for (std::size_t i = 0; i < n; ++i) a[i] <<= k * (n - 1 - i);
        return IntPoly(std::move(a));
    }
    /// Integer polynomial with roots r * (roots of P), r = p/q: sum a_k p^(n-k) q^k T^k.
    IntPoly scale_roots(const Rational& r) const {
        if (r == 0) throw std::domain_error("scale by zero");
        const BigInt& p = r.get_num();
        const BigInt& q = r.get_den();
        const std::size_t n = c_.size();
        std::vector<BigInt> a(n);
        BigInt qk = 1;
        for (std::size_t k = 0; k < n; ++k) {
            a[k] = c_[k] * qk * ::multibrot::exact::pow(p, n - 1 - k);
            qk *= q;
        }
        return IntPoly(std::move(a));
    }
    /// P(T^s).
    IntPoly inflate(std::size_t s) const {
        if (is_zero()) return {};
        std::vector<BigInt> a((c_.size() - 1) * s + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) a[i * s] = c_[i];
        return IntPoly(std::move(a));
    }

    /// Multiplicity of the root 0.
    std::size_t low_order() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        return k;
    }
    IntPoly shift_down(std::size_t k) const {
        if (k >= c_.size()) return {};
        return IntPoly(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    IntPoly& operator*=(const BigInt& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& a : c_) a *= s;
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(IntPoly a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
        return IntPoly(std::move(out));
    }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly pow(unsigned k) const {
        IntPoly r = constant(1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    /// P(Q(T)).
    IntPoly compose(const IntPoly& q) const {
        IntPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
        return acc;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    /// Total order: degree, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            int s = cmp(a.c_[i], b.c_[i]);
            if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    std::size_t max_coeff_bits() const {
        std::size_t b = 0;
        for (const auto& a : c_) b = std::max(b, bit_length(a));
        return b;
    }

    /// Human-readable form in the variable `var`, highest degree first.
    std::string str(const std::string& var = "T") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const BigInt& a = c_[i];
            if (a == 0) continue;
            BigInt mag = abs(a);
            if (first) {
                if (a < 0) os << "-";
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            if (i == 0 || mag != 1) os << mag.get_str();
            if (i >= 1) os << var;
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

/// Polynomial with the given rational roots, cleared to integers (primitive).
inline IntPoly from_rational_root(const Rational& r) {
    return IntPoly(std::vector<BigInt>{-BigInt(r.get_num()), BigInt(r.get_den())});
}

/// Exact division over the rationals, reported as an integer polynomial:
/// returns Q with lead(B)^(deg A - deg B + 1) A = Q B + R (pseudo-division).
struct PseudoDivision {
    IntPoly quotient;
    IntPoly remainder;
};

inline PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {IntPoly{}, a};
    const int m = a.degree(), n = b.degree();
    std::vector<BigInt> r = a.coeffs();
    std::vector<BigInt> q(static_cast<std::size_t>(m - n + 1));
    const BigInt& lb = b.lead();
    for (int k = m - n; k >= 0; --k) {
        BigInt t = r[static_cast<std::size_t>(n + k)];
        for (auto& v : q) v *= lb;
        q[static_cast<std::size_t>(k)] = t;
        for (auto& v : r) v *= lb;
        for (int j = 0; j <= n; ++j) mpz_submul(r[static_cast<std::size_t>(j + k)].get_mpz_t(), t.get_mpz_t(), b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// Pseudo-remainder only (cheaper: no quotient bookkeeping).
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return a;
    const int n = b.degree();
    std::vector<BigInt> r = a.coeffs();
    const BigInt& lb = b.lead();
    for (int top = a.degree(); top >= n; --top) {
        BigInt t = r[static_cast<std::size_t>(top)];
        for (int j = 0; j < top; ++j) r[static_cast<std::size_t>(j)] *= lb;
        r[static_cast<std::size_t>(top)] = 0;
        if (t != 0)
            for (int j = 0; j < n; ++j) mpz_submul(r[static_cast<std::size_t>(j + top - n)].get_mpz_t(), t.get_mpz_t(), b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(n));
    return IntPoly(std::move(r));
}

/// If B divides A in Z[T], the quotient; otherwise nullopt-like empty flag.
/// Aborts early on the first non-integral quotient coefficient.
inline bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly* quotient) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) {
        if (quotient) *quotient = IntPoly{};
        return true;
    }
    if (a.degree() < b.degree()) return false;
    const int m = a.degree(), n = b.degree();
    std::vector<BigInt> r = a.coeffs();
    std::vector<BigInt> q(static_cast<std::size_t>(m - n + 1));
    const BigInt& lb = b.lead();
    for (int k = m - n; k >= 0; --k) {
        BigInt& top = r[static_cast<std::size_t>(n + k)];
        if (!divides(lb, top)) return false;
        BigInt t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= n; ++j) mpz_submul(r[static_cast<std::size_t>(j + k)].get_mpz_t(), t.get_mpz_t(), b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
        q[static_cast<std::size_t>(k)] = std::move(t);
    }
    for (int j = 0; j < n; ++j)
        if (r[static_cast<std::size_t>(j)] != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

/// Quotient of A by B over Q, scaled to a primitive integer polynomial.
/// Requires B | A over Q.
inline IntPoly divide_primitive(const IntPoly& a, const IntPoly& b) {
    IntPoly ap = a.primitive(), bp = b.primitive();
    IntPoly q;
    if (divide_exact(ap, bp, &q)) return q.primitive();
    auto pd = pseudo_divide(ap, bp);
    if (!pd.remainder.is_zero()) throw std::domain_error("divide_primitive: not a divisor");
    return pd.quotient.primitive();
}

/// min over nonzero coefficients of the p-adic valuation.
inline long poly_valuation(const IntPoly& p, const BigInt& prime) {
    if (p.is_zero()) throw std::domain_error("poly_valuation: zero polynomial");
    if (!is_prime(prime)) throw std::domain_error("poly_valuation: modulus is not prime");
    long best = -1;
    for (const auto& a : p.coeffs()) {
        if (a == 0) continue;
        long v = valuation(a, prime);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace multibrot::exact
