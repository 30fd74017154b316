#pragma once

#include "multibrot/algebraic/complex_roots.hpp"
#include "multibrot/exact/factor.hpp"
#include "multibrot/exact/json.hpp"
#include "multibrot/exact/real_roots.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace multibrot::algebraic {

using exact::Json;
using exact::RootInterval;

/// A root of an irreducible integer polynomial, pinned down by a rational
/// interval (real roots) or a rational box (non-real roots).
class AlgebraicNumber {
public:
    AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}

    explicit AlgebraicNumber(const Rational& r) : minpoly_(exact::from_rational_root(r)), locator_(RootInterval{r, r}) {}

    /// Real root of `minpoly` inside `iv`; checked by a Sturm count.
    static AlgebraicNumber real(const IntPoly& minpoly, const RootInterval& iv) {
        AlgebraicNumber a;
        a.minpoly_ = minpoly.primitive();
        if (a.minpoly_.degree() < 1) throw std::invalid_argument("AlgebraicNumber: constant minimal polynomial");
        int count = iv.exact() ? (a.minpoly_.sign_at(iv.lo) == 0 ? 1 : 0)
                               : exact::sturm_count(a.minpoly_, iv.lo, iv.hi) + (a.minpoly_.sign_at(iv.lo) == 0 ? 1 : 0);
        if (count != 1) throw std::invalid_argument("AlgebraicNumber: interval does not isolate one root");
        a.locator_ = iv;
        if (a.minpoly_.degree() == 1) {
            Rational r = exact::make_rational(-a.minpoly_[0], a.minpoly_[1]);
            a.locator_ = RootInterval{r, r};
        }
        return a;
    }

    /// Non-real root in a certified box (the caller's box must come from
    /// isolate_complex_roots of the same polynomial).
    static AlgebraicNumber complex(const IntPoly& minpoly, const ComplexBox& box) {
        if (box.meets_real_axis()) throw std::invalid_argument("AlgebraicNumber: complex box meets the real axis");
        AlgebraicNumber a;
        a.minpoly_ = minpoly.primitive();
        a.locator_ = box;
        return a;
    }

    /// All real roots of p as algebraic numbers, sorted increasingly.
    static std::vector<AlgebraicNumber> real_roots_of(const IntPoly& p) {
        std::vector<AlgebraicNumber> out;
        for (const auto& f : exact::irreducible_factors(p)) {
            if (f.degree() < 1) continue;
            for (const auto& iv : exact::isolate_real_roots(f)) {
                AlgebraicNumber a;
                a.minpoly_ = f;
                a.locator_ = iv;
                if (f.degree() == 1) {
                    Rational r = exact::make_rational(-f[0], f[1]);
                    a.locator_ = RootInterval{r, r};
                }
                out.push_back(std::move(a));
            }
        }
        std::sort(out.begin(), out.end(), [](const AlgebraicNumber& x, const AlgebraicNumber& y) { return compare(x, y) < 0; });
        return out;
    }

    /// All complex roots of p (real ones first, sorted; then the others).
    static std::vector<AlgebraicNumber> roots_of(const IntPoly& p) {
        std::vector<AlgebraicNumber> out = real_roots_of(p);
        for (const auto& f : exact::irreducible_factors(p)) {
            if (f.degree() < 2) continue;
            for (const auto& b : isolate_nonreal_roots(f)) out.push_back(complex(f, b));
        }
        return out;
    }

    const IntPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    bool is_real() const { return std::holds_alternative<RootInterval>(locator_); }
    bool is_rational() const { return degree() == 1; }

    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("AlgebraicNumber is not rational");
        return exact::make_rational(-minpoly_[0], minpoly_[1]);
    }

    const RootInterval& interval() const {
        if (!is_real()) throw std::domain_error("AlgebraicNumber is not real");
        return std::get<RootInterval>(locator_);
    }
    const ComplexBox& box() const {
        if (is_real()) throw std::domain_error("AlgebraicNumber is real");
        return std::get<ComplexBox>(locator_);
    }

    /// Isolating interval refined to width at most w.
    RootInterval refined(const Rational& w) const { return exact::refine(minpoly_, interval(), w); }

    /// Narrow the stored interval in place (still a valid locator).
    void refine_to(const Rational& w) {
        if (is_real()) locator_ = refined(w);
    }

    double approx() const {
        if (!is_real()) return std::numeric_limits<double>::quiet_NaN();
        return refined(Rational(1, 1) / (BigInt(1) << 60)).approx();
    }
    std::complex<double> approx_complex() const {
        if (is_real()) return {approx(), 0.0};
        return box().center();
    }

    /// Sign of a real algebraic number, exactly.
    int sign() const { return compare(*this, AlgebraicNumber(Rational(0))); }

    /// Three-way comparison of real algebraic numbers.
    friend int compare(const AlgebraicNumber& x, const AlgebraicNumber& y) {
        RootInterval a = x.interval(), b = y.interval();
        if (x.minpoly_ == y.minpoly_) {
            // same polynomial: isolating intervals of one root overlap, of
            // distinct roots they can be separated
            while (true) {
                if (a.hi < b.lo) return -1;
                if (b.hi < a.lo) return 1;
                Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
                int c = (lo == hi) ? (x.minpoly_.sign_at(lo) == 0 ? 1 : 0)
                                   : exact::sturm_count(x.minpoly_, lo, hi) + (x.minpoly_.sign_at(lo) == 0 ? 1 : 0);
                if (c == 1) return 0;
                a = exact::refine(x.minpoly_, a, a.width() / 2);
                b = exact::refine(y.minpoly_, b, b.width() / 2);
            }
        }
        // distinct irreducible polynomials share no root
        while (true) {
            if (a.hi < b.lo) return -1;
            if (b.hi < a.lo) return 1;
            if (a.exact() && b.exact()) return a.lo < b.lo ? -1 : (a.lo > b.lo ? 1 : 0);
            if (!a.exact()) a = exact::refine(x.minpoly_, a, a.width() / 2);
            if (!b.exact()) b = exact::refine(y.minpoly_, b, b.width() / 2);
        }
    }
    friend int compare(const AlgebraicNumber& x, const Rational& r) { return compare(x, AlgebraicNumber(r)); }

    friend bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y) {
        if (x.minpoly_ != y.minpoly_) return false;
        if (x.is_real() != y.is_real()) return false;
        if (x.is_real()) return compare(x, y) == 0;
        // non-real: certified boxes of one polynomial are disjoint unless they hold the same root
        return !x.box().disjoint(y.box()) && same_complex_root(x, y);
    }

    Json to_json() const {
        Json j;
        j["minpoly"] = exact::to_json(minpoly_);
        if (is_real()) {
            const auto& iv = interval();
            j["locator"] = {exact::to_string(iv.lo), exact::to_string(iv.hi)};
        } else {
            const auto& b = box();
            j["locator"] = Json::array({Json::array({exact::to_string(b.re_lo), exact::to_string(b.re_hi)}),
                                        Json::array({exact::to_string(b.im_lo), exact::to_string(b.im_hi)})});
        }
        return j;
    }

    static AlgebraicNumber from_json(const Json& j) {
        IntPoly p = exact::poly_from_json(j.at("minpoly"));
        const Json& loc = j.at("locator");
        if (loc.size() == 2 && loc[0].is_string()) {
            return real(p, RootInterval{exact::rational_from_json(loc[0]), exact::rational_from_json(loc[1])});
        }
        ComplexBox b{exact::rational_from_json(loc[0][0]), exact::rational_from_json(loc[0][1]),
                     exact::rational_from_json(loc[1][0]), exact::rational_from_json(loc[1][1])};
        return complex(p, b);
    }

    std::string str() const {
        if (is_rational()) return exact::to_string(rational_value());
        if (is_real()) return "root of " + minpoly_.str() + " near " + std::to_string(approx());
        auto z = approx_complex();
        return "root of " + minpoly_.str() + " near " + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") +
               std::to_string(z.imag()) + "i";
    }

private:
    static bool same_complex_root(const AlgebraicNumber& x, const AlgebraicNumber& y) {
        // Map each box to the unique root box of a fresh isolation it meets.
        auto fresh = isolate_nonreal_roots(x.minpoly_);
        auto index_of = [&](const ComplexBox& box) {
            int found = -1;
            for (std::size_t k = 0; k < fresh.size(); ++k) {
                if (fresh[k].disjoint(box)) continue;
                if (found >= 0) throw std::runtime_error("AlgebraicNumber: locator box too coarse to compare");
                found = static_cast<int>(k);
            }
            return found;
        };
        return index_of(x.box()) == index_of(y.box());
    }

    IntPoly minpoly_;
    std::variant<RootInterval, ComplexBox> locator_;
};

}  // namespace multibrot::algebraic
