#pragma once

// Arithmetic checks on the minimal polynomial P = a_n T^n + ... + a_0 of a
// parabolic parameter of z^d + c: the forced leading coefficient
// d^(nd/(d-1)), the p-adic valuations of its roots, and the divisibility
// and size of the discriminant.

#include "multibrot/algebraic/algebraic.hpp"
#include "multibrot/algebraic/newton_polygon.hpp"
#include "multibrot/capacity/diameter.hpp"
#include "multibrot/dynamics/family.hpp"
#include "multibrot/exact/resultant.hpp"
#include "multibrot/exact/json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multibrot::certificates {

using exact::BigInt;
using exact::Json;
using exact::IntPoly;
using exact::Rational;

enum class CheckStatus { pass, fail, not_integer, not_applicable };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_integer: return "not an integer";
        case CheckStatus::not_applicable: return "not applicable";
    }
    return "?";
}

struct CheckResult {
    CheckStatus status = CheckStatus::fail;
    Json witness = Json::object();
    bool ok() const { return status == CheckStatus::pass; }
};

/// d^(n d/(d-1)) when it is an integer.
inline std::optional<BigInt> required_leading_coefficient(unsigned n, unsigned d) {
    dynamics::require_degree(d);
    BigInt out = 1;
    for (const auto& [p, e] : exact::factor_small(d)) {
        unsigned long num = static_cast<unsigned long>(n) * d * e;
        if (num % (d - 1)) return std::nullopt;
        out *= exact::pow(BigInt(static_cast<unsigned long>(p)), num / (d - 1));
    }
    return out;
}

inline CheckResult leading_coeff_check(const IntPoly& P, unsigned d) {
    if (!P.is_canonical() || P.degree() < 1) throw std::invalid_argument("leading_coeff_check: P must be canonical");
    CheckResult r;
    const unsigned n = static_cast<unsigned>(P.degree());
    r.witness["n"] = n;
    r.witness["a_n"] = exact::to_string(P.lead());
    auto want = required_leading_coefficient(n, d);
    if (!want) {
        r.status = CheckStatus::not_integer;
        r.witness["required"] = "d^(" + std::to_string(n * d) + "/" + std::to_string(d - 1) + ") is not an integer";
        return r;
    }
    r.witness["required"] = exact::to_string(*want);
    r.status = P.lead() == *want ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

/// Root valuations: -(d/(d-1)) v_p(d) at every p | d, nonnegative at the
/// primes below `prime_bound` dividing a_0 a_n but not d.
inline CheckResult valuation_check(const IntPoly& P, unsigned d, unsigned long prime_bound = 1u << 16) {
    if (!P.is_canonical() || P.degree() < 1) throw std::invalid_argument("valuation_check: P must be canonical");
    dynamics::require_degree(d);
    CheckResult r;
    r.status = CheckStatus::pass;
    Json primes = Json::array();
    auto record = [&](const BigInt& p, const std::vector<Rational>& vals, const std::string& rule, bool ok) {
        Json v = Json::array();
        for (const auto& x : vals) v.push_back(exact::to_string(x));
        primes.push_back({{"p", exact::to_string(p)}, {"root_valuations", v}, {"rule", rule}, {"ok", ok}});
        if (!ok) r.status = CheckStatus::fail;
    };
    std::vector<BigInt> divisors_of_d;
    for (const auto& [p, e] : exact::factor_small(d)) {
        BigInt bp(static_cast<unsigned long>(p));
        divisors_of_d.push_back(bp);
        Rational want = -exact::make_rational(BigInt(static_cast<unsigned long>(d) * e), BigInt(d - 1));
        auto vals = algebraic::root_valuations(P, bp);
        bool ok = static_cast<long>(vals.size()) == P.degree();
        for (const auto& v : vals) ok = ok && v == want;
        record(bp, vals, "= " + exact::to_string(want), ok);
    }
    BigInt a0 = P[0] == 0 ? BigInt(1) : BigInt(abs(P[0]));
    for (const auto& p : exact::small_prime_divisors(a0 * P.lead(), prime_bound)) {
        bool divides_d = false;
        for (const auto& q : divisors_of_d) divides_d = divides_d || q == p;
        if (divides_d) continue;
        auto vals = algebraic::root_valuations(P, p);
        bool ok = P[0] != 0;
        for (const auto& v : vals) ok = ok && v >= 0;
        record(p, vals, ">= 0", ok);
    }
    r.witness["primes"] = primes;
    return r;
}

/// a_n^(n-1) | Delta(P) and a_n^(n-1) <= |Delta(P)|; for even d >= 4 and P
/// with all roots in [beta(d), -1] also Delta(P) <= the capacity bound.
inline CheckResult discriminant_bound_check(const IntPoly& P, unsigned d, unsigned bits = 128) {
    if (!P.is_canonical() || P.degree() < 1) throw std::invalid_argument("discriminant_bound_check: P must be canonical");
    dynamics::require_degree(d);
    CheckResult r;
    const unsigned n = static_cast<unsigned>(P.degree());
    BigInt disc = exact::discriminant(P);
    BigInt lower = exact::pow(P.lead(), n - 1);
    bool divisible = exact::divides(lower, disc);
    bool above = abs(disc) >= lower;
    r.witness["discriminant"] = exact::to_string(disc);
    r.witness["a_n^(n-1)"] = exact::to_string(lower);
    r.witness["divisible"] = divisible;
    r.witness["lower_bound"] = above;
    bool ok = divisible && above && disc != 0;
    bool roots_in_slice = d >= 4 && d % 2 == 0 && algebraic::is_totally_real(P) &&
                          algebraic::roots_in_closed(P, Rational(-2), Rational(-1)) == P.degree() &&
                          [&] {
                              auto beta = dynamics::constants(d).beta;
                              auto roots = algebraic::AlgebraicNumber::real_roots_of(P);
                              return compare(roots.front(), beta) >= 0;
                          }();
    if (roots_in_slice) {
        auto ub = capacity::discriminant_upper_bound(P.lead(), d, n, bits);
        bool below = Rational(disc) <= ub.lo_rational();
        r.witness["upper_bound"] = {exact::to_string(ub.lo_rational()), exact::to_string(ub.hi_rational())};
        r.witness["below_upper_bound"] = below;
        ok = ok && below;
    } else {
        r.witness["upper_bound"] = "not applicable";
    }
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

}  // namespace multibrot::certificates
