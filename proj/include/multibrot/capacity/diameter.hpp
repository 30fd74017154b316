#pragma once

// n-th diameters of real intervals: d_n([a, b]) = (b - a) D_n^(1/(n(n-1)))
// with D_2 = 1 and
//   D_n = n^n (n-2)^(n-2) / (2^(2n-2) (2n-3)^(2n-3)) D_(n-1),
// plus the quantities sigma(d), tau(n) and the comparison sigma(d) tau(n) vs 1.

#include "multibrot/exact/dyadic.hpp"
#include "multibrot/exact/json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace multibrot::capacity {

using exact::BigInt;
using exact::DyadicInterval;
using exact::Json;
using exact::Rational;

/// Exact D_2 .. D_N; entry k holds D_(k+2).
class DiameterTable {
public:
    explicit DiameterTable(unsigned N) {
        if (N < 2) throw std::invalid_argument("DiameterTable: N >= 2");
        values_.push_back(Rational(1));
        for (unsigned n = 3; n <= N; ++n) values_.push_back(values_.back() * ratio(n));
    }

    unsigned max_n() const { return static_cast<unsigned>(values_.size()) + 1; }

    const Rational& operator[](unsigned n) const {
        if (n < 2 || n > max_n()) throw std::out_of_range("DiameterTable: index out of range");
        return values_[n - 2];
    }

    /// D_n / D_(n-1).
    static Rational ratio(unsigned n) {
        if (n < 3) throw std::invalid_argument("DiameterTable::ratio: n >= 3");
        BigInt num = exact::pow(BigInt(n), n) * exact::pow(BigInt(n - 2), n - 2);
        BigInt den = exact::pow(BigInt(2), 2 * n - 2) * exact::pow(BigInt(2 * n - 3), 2 * n - 3);
        return exact::make_rational(num, den);
    }

    /// Does every entry satisfy the recursion?
    bool consistent() const {
        if (values_.front() != 1) return false;
        for (unsigned n = 3; n <= max_n(); ++n)
            if ((*this)[n] != (*this)[n - 1] * ratio(n)) return false;
        return true;
    }

    Json to_json() const {
        Json j = Json::object();
        for (unsigned n = 2; n <= max_n(); ++n) j[std::to_string(n)] = exact::to_string((*this)[n]);
        return j;
    }

private:
    std::vector<Rational> values_;
};

inline DiameterTable D_table(unsigned N) { return DiameterTable(N); }

inline Rational D(unsigned n) { return D_table(n)[n]; }

/// tau(n) = D_n^(1/(n(n-1))).
inline DyadicInterval tau(unsigned n, unsigned bits) {
    if (n < 2) throw std::invalid_argument("tau: n >= 2");
    const unsigned work = bits + 8;
    return DyadicInterval::from_rational(D(n), work).root(static_cast<unsigned long>(n) * (n - 1)).with_bits(bits);
}

/// d_n([a, b]) = (b - a) tau(n).
inline DyadicInterval dn_interval(const Rational& a, const Rational& b, unsigned n, unsigned bits) {
    if (!(a < b)) throw std::invalid_argument("dn_interval: need a < b");
    if (n < 2) throw std::invalid_argument("dn_interval: n >= 2");
    return (DyadicInterval::from_rational(b - a, bits + 8) * tau(n, bits + 8)).with_bits(bits);
}

/// d_infinity([a, b]) = (b - a) / 4.
inline Rational transfinite_diameter(const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("transfinite_diameter: need a < b");
    return (b - a) / 4;
}

/// 2^(1/(d-1)) - 1, which is also -1 - beta(d).
inline DyadicInterval two_root_minus_one(unsigned d, unsigned bits) {
    if (d < 2) throw std::invalid_argument("degree d must be >= 2");
    const unsigned work = bits + 16 + static_cast<unsigned>(exact::bit_length(BigInt(d)));
    return DyadicInterval::exact(2, work).root(d - 1) - DyadicInterval::exact(1, work);
}

/// sigma(d) = d^(d/(d-1)) (2^(1/(d-1)) - 1).
inline DyadicInterval sigma(unsigned d, unsigned bits) {
    if (d < 2) throw std::invalid_argument("sigma: d >= 2");
    const unsigned work = bits + 16 + static_cast<unsigned>(exact::bit_length(BigInt(d)));
    DyadicInterval scale = DyadicInterval::exact(exact::pow(BigInt(d), d), work).root(d - 1);
    return (scale * two_root_minus_one(d, work)).with_bits(bits);
}

/// a_n^(2(n-1)) (2^(1/(d-1)) - 1)^(n(n-1)) D_n: the upper bound on a discriminant
/// of a degree-n polynomial with leading coefficient a_n and roots in [beta, 0].
inline DyadicInterval discriminant_upper_bound(const BigInt& lead, unsigned d, unsigned n, unsigned bits) {
    if (n < 1) throw std::invalid_argument("discriminant_upper_bound: n >= 1");
    const unsigned work = bits + 16;
    if (n == 1) return DyadicInterval::exact(1, work);
    DyadicInterval a = DyadicInterval::exact(exact::pow(lead, 2 * (n - 1)), work);
    return (a * two_root_minus_one(d, work).pow(static_cast<unsigned long>(n) * (n - 1)) *
            DyadicInterval::from_rational(D(n), work))
        .with_bits(bits);
}

struct Inequality41 {
    unsigned d = 0, n = 0;
    DyadicInterval product;  // sigma(d) tau(n)
    bool holds = false;      // product >= 1
    unsigned bits = 0;       // precision at which the enclosure cleared 1

    Json to_json() const {
        return Json{{"d", d},
                    {"n", n},
                    {"product_enclosure", {exact::to_string(product.lo_rational()), exact::to_string(product.hi_rational())}},
                    {"product_approx", product.str(17)},
                    {"verdict", holds ? "holds" : "fails"},
                    {"bits", bits}};
    }
};

constexpr unsigned max_precision_bits = 4096;

/// Certified comparison of sigma(d) tau(n) with 1; precision is doubled
/// until the enclosure clears 1.
inline Inequality41 inequality_41(unsigned d, unsigned n, unsigned bits = 64) {
    if (d < 4 || d % 2) throw std::invalid_argument("inequality_41: d must be even and >= 4");
    if (n < 2) throw std::invalid_argument("inequality_41: n >= 2");
    for (unsigned b = std::max(bits, 16u); b <= max_precision_bits; b *= 2) {
        DyadicInterval p = sigma(d, b) * tau(n, b);
        if (p.certainly_greater(Rational(1)) || p.certainly_less(Rational(1))) {
            Inequality41 out;
            out.d = d;
            out.n = n;
            out.product = p;
            out.holds = p.certainly_greater(Rational(1));
            out.bits = b;
            return out;
        }
    }
    throw std::runtime_error("inequality_41: could not separate the product from 1 within " +
                             std::to_string(max_precision_bits) + " bits");
}

}  // namespace multibrot::capacity
