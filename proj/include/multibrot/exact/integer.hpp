#pragma once

// Arbitrary-precision integers and rationals (GMP-backed) plus the small
// number-theoretic helpers used throughout the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multibrot::exact {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (r.get_den() == 0) throw std::domain_error("zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(10); }
inline std::string to_string(const Rational& x) { return x.get_str(10); }

inline int sign(const BigInt& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

inline BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("0 to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    BigInt n = pow(BigInt(base.get_num()), static_cast<unsigned long>(exponent));
    BigInt d = pow(BigInt(base.get_den()), static_cast<unsigned long>(exponent));
    return make_rational(n, d);
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const BigInt& d, const BigInt& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Number of bits of |x| (0 for x = 0).
inline std::size_t bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline bool is_prime(const BigInt& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

inline bool is_prime(std::uint64_t p) { return is_prime(BigInt(static_cast<unsigned long>(p))); }

/// Exponent of the prime p in the nonzero integer x.
inline long valuation(const BigInt& x, const BigInt& p) {
    if (x == 0) throw std::domain_error("valuation of zero is infinite");
    if (p < 2) throw std::domain_error("valuation base must be >= 2");
    BigInt y = x;
    long v = 0;
    while (divides(p, y)) {
        y /= p;
        ++v;
    }
    return v;
}

inline long valuation(const Rational& x, const BigInt& p) {
    if (x == 0) throw std::domain_error("valuation of zero is infinite");
    return valuation(BigInt(x.get_num()), p) - valuation(BigInt(x.get_den()), p);
}

/// Prime factorization of a machine-sized positive integer by trial division.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (auto [p, e] : factor_small(n)) ps.push_back(p);
    return ps;
}

/// Primes dividing x that are below `bound` (trial division only).
inline std::vector<BigInt> small_prime_divisors(BigInt x, unsigned long bound) {
    std::vector<BigInt> out;
    if (x < 0) x = -x;
    if (x == 0) return out;
    // trial division: each divisor found is the least remaining, hence prime
    for (unsigned long p = 2; p < bound && x > 1; ++p) {
        if (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
            out.emplace_back(p);
            while (divides(BigInt(p), x)) x /= p;
        }
    }
    return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, e] : factor_small(n)) r = r / p * (p - 1);
    return r;
}

/// floor(log2 |x|) for nonzero rational x.
inline long floor_log2(const Rational& x) {
    if (x == 0) throw std::domain_error("log of zero");
    BigInt n = abs(x.get_num());
    BigInt d = x.get_den();
    long guess = static_cast<long>(bit_length(n)) - static_cast<long>(bit_length(d));
    // 2^guess vs |x|: adjust by at most one step either side
    auto le = [&](long e) {  // 2^e <= |x| ?
        if (e >= 0) return (BigInt(1) << e) * d <= n;
        return d <= (n << -e);
    };
    while (!le(guess)) --guess;
    while (le(guess + 1)) ++guess;
    return guess;
}

}  // namespace multibrot::exact
