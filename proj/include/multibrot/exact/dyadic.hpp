#pragma once

// Intervals with dyadic endpoints m * 2^e and outward rounding. Irrational
// quantities enter only through exact integer k-th roots, so every
// interval provably contains the value it names.

#include "multibrot/exact/integer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace multibrot::exact {

struct Dyadic {
    BigInt m = 0;
    long e = 0;

    Dyadic() = default;
    Dyadic(BigInt mantissa, long exponent) : m(std::move(mantissa)), e(exponent) { normalize(); }
    explicit Dyadic(long v) : m(v), e(0) { normalize(); }

    void normalize() {
        if (m == 0) {
            e = 0;
            return;
        }
        unsigned long tz = mpz_scan1(m.get_mpz_t(), 0);
        if (tz > 0) {
            mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), tz);
            e += static_cast<long>(tz);
        }
    }

    Rational to_rational() const {
        Rational r(m);
        if (e >= 0) {
            mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
        } else {
            mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
        }
        r.canonicalize();
        return r;
    }

    double to_double() const { return std::ldexp(m.get_d(), static_cast<int>(e)); }
    int sign() const { return sgn(m); }
};

inline Dyadic operator-(const Dyadic& a) { return Dyadic(-a.m, a.e); }

inline Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.m == 0) return b;
    if (b.m == 0) return a;
    long e = std::min(a.e, b.e);
    BigInt x = a.m, y = b.m;
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(a.e - e));
    mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(b.e - e));
    return Dyadic(x + y, e);
}

inline Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
inline Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.m * b.m, a.e + b.e); }

inline int compare(const Dyadic& a, const Dyadic& b) { return (a - b).sign(); }
inline bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
inline bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
inline bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
inline bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }
inline bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }

namespace detail {

/// Keep at most `bits` significant bits, rounding toward -inf or +inf.
inline Dyadic round_dyadic(const Dyadic& v, unsigned bits, bool up) {
    std::size_t len = bit_length(v.m);
    if (v.m == 0 || len <= bits) return v;
    unsigned long shift = len - bits;
    BigInt q;
    if (up) {
        mpz_cdiv_q_2exp(q.get_mpz_t(), v.m.get_mpz_t(), shift);
    } else {
        mpz_fdiv_q_2exp(q.get_mpz_t(), v.m.get_mpz_t(), shift);
    }
    return Dyadic(q, v.e + static_cast<long>(shift));
}

/// floor or ceil of r * 2^k as an integer.
inline BigInt scaled_round(const Rational& r, long k, bool up) {
    BigInt num = r.get_num(), den = r.get_den();
    if (k >= 0) {
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
    } else {
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-k));
    }
    BigInt q;
    if (up) {
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return q;
}

}  // namespace detail

class DyadicInterval {
public:
    DyadicInterval() = default;
    DyadicInterval(Dyadic lo, Dyadic hi, unsigned bits) : lo_(std::move(lo)), hi_(std::move(hi)), bits_(bits) {
        if (hi_ < lo_) throw std::invalid_argument("DyadicInterval: lo > hi");
        lo_ = detail::round_dyadic(lo_, bits_, false);
        hi_ = detail::round_dyadic(hi_, bits_, true);
    }

    static DyadicInterval exact(const BigInt& v, unsigned bits) { return {Dyadic(v, 0), Dyadic(v, 0), bits}; }

    /// Tightest enclosure of r with about `bits` significant bits.
    static DyadicInterval from_rational(const Rational& r, unsigned bits) {
        if (r == 0) return {Dyadic(), Dyadic(), bits};
        long k = static_cast<long>(bits) + 2 - floor_log2(abs(r));
        return {Dyadic(detail::scaled_round(r, k, false), -k), Dyadic(detail::scaled_round(r, k, true), -k), bits};
    }

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    unsigned bits() const { return bits_; }
    Rational lo_rational() const { return lo_.to_rational(); }
    Rational hi_rational() const { return hi_.to_rational(); }
    Rational midpoint() const { return (lo_rational() + hi_rational()) / 2; }
    Rational width() const { return hi_rational() - lo_rational(); }
    double approx() const { return midpoint().get_d(); }

    bool contains(const Rational& r) const { return lo_rational() <= r && r <= hi_rational(); }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool certainly_less(const Rational& r) const { return hi_rational() < r; }
    bool certainly_greater(const Rational& r) const { return lo_rational() > r; }
    bool certainly_less(const DyadicInterval& o) const { return hi_ < o.lo_; }
    bool certainly_greater(const DyadicInterval& o) const { return lo_ > o.hi_; }
    bool subset_of(const DyadicInterval& o) const { return o.lo_ <= lo_ && hi_ <= o.hi_; }

    /// Same interval widened to `bits` precision (never narrower).
    DyadicInterval with_bits(unsigned bits) const { return {lo_, hi_, bits}; }

    friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
        return {a.lo_ + b.lo_, a.hi_ + b.hi_, std::min(a.bits_, b.bits_)};
    }
    friend DyadicInterval operator-(const DyadicInterval& a) { return {-a.hi_, -a.lo_, a.bits_}; }
    friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) { return a + (-b); }
    friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
        Dyadic p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
        Dyadic lo = p[0], hi = p[0];
        for (const auto& v : p) {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        return {lo, hi, std::min(a.bits_, b.bits_)};
    }
    friend DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b) { return a * b.reciprocal(); }

    DyadicInterval reciprocal() const {
        if (contains_zero()) throw std::domain_error("DyadicInterval: division by an interval containing zero");
        Rational l = 1 / hi_rational(), h = 1 / lo_rational();
        DyadicInterval lo_enc = from_rational(l, bits_), hi_enc = from_rational(h, bits_);
        return {lo_enc.lo_, hi_enc.hi_, bits_};
    }

    DyadicInterval pow(unsigned long k) const {
        DyadicInterval r = exact(1, bits_), base = *this;
        if (k % 2 == 0 && lo_.sign() < 0 && hi_.sign() > 0) {
            Dyadic m = std::max(-lo_, hi_);
            DyadicInterval mag{Dyadic(), m, bits_};
            return mag.pow(k);
        }
        while (k) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    /// Positive k-th root of a nonnegative interval.
    DyadicInterval root(unsigned long k) const {
        if (k == 0) throw std::invalid_argument("root: k must be positive");
        if (lo_.sign() < 0) throw std::domain_error("root of a negative interval");
        if (k == 1) return *this;
        return {root_bound(lo_, k, false), root_bound(hi_, k, true), bits_};
    }

    std::string str(int digits = 20) const {
        std::ostringstream os;
        os.precision(digits);
        os << "[" << lo_.to_double() << ", " << hi_.to_double() << "]";
        return os.str();
    }

private:
    /// floor/ceil of v^(1/k) on a grid of spacing 2^-s with about `bits_` bits.
    Dyadic root_bound(const Dyadic& v, unsigned long k, bool up) const {
        if (v.m == 0) return Dyadic();
        const long len = static_cast<long>(bit_length(v.m)) + v.e;  // about log2 v
        const long kk = static_cast<long>(k);
        // target: result has bits_ + 2 significant bits
        long s = static_cast<long>(bits_) + 2 - len / kk + 1;
        while (v.e + kk * s < 0) ++s;
        BigInt n = v.m;
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(v.e + kk * s));
        BigInt r;
        int exact_root = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
        if (up && !exact_root) r += 1;
        return Dyadic(r, -s);
    }

    Dyadic lo_, hi_;
    unsigned bits_ = 64;
};

/// Enclosure of ln 2 = sum_{k>=1} 1 / (k 2^k); the tail after K terms is
/// below 1 / ((K+1) 2^K).
inline DyadicInterval ln2_enclosure(unsigned bits) {
    const unsigned long terms = bits + 8;
    Rational sum = 0;
    for (unsigned long k = 1; k <= terms; ++k) {
        BigInt den = BigInt(k) << k;
        sum += make_rational(BigInt(1), den);
    }
    Rational tail = make_rational(BigInt(1), BigInt(terms + 1) << terms);
    DyadicInterval lo = DyadicInterval::from_rational(sum, bits);
    DyadicInterval hi = DyadicInterval::from_rational(sum + tail, bits);
    return {lo.lo(), hi.hi(), bits};
}

}  // namespace multibrot::exact
