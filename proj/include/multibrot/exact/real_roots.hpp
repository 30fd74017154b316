#pragma once

// Sturm sequences and Descartes-rule root isolation. Both are exact; they
// are independent routes to the real-root count of a polynomial and the
// tests play them against each other.

#include "multibrot/exact/resultant.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace multibrot::exact {

/// Signed remainder sequence of a polynomial, kept primitive.
class SturmSequence {
public:
    explicit SturmSequence(const IntPoly& p) {
        if (p.is_zero()) throw std::domain_error("Sturm sequence of zero polynomial");
        IntPoly s0 = squarefree_part(p);
        seq_.push_back(s0);
        if (s0.degree() < 1) return;
        seq_.push_back(s0.derivative().primitive());
        while (seq_.back().degree() > 0) {
            const IntPoly& a = seq_[seq_.size() - 2];
            const IntPoly& b = seq_.back();
            IntPoly r = pseudo_remainder(a, b);
            if (r.is_zero()) break;
            // rem(a, b) = prem(a, b) / lc(b)^(delta+1); next = -rem up to a positive factor
            const int delta = a.degree() - b.degree();
            const bool flip = !(b.lead() < 0 && (delta + 1) % 2 == 1);
            BigInt c = r.content();
            std::vector<BigInt> v = r.coeffs();
            for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            IntPoly next(std::move(v));
            if (flip) next = -next;
            seq_.push_back(std::move(next));
        }
    }

    const std::vector<IntPoly>& polys() const { return seq_; }

    /// Sign variations at x.
    int variations_at(const Rational& x) const {
        int v = 0, last = 0;
        for (const auto& s : seq_) {
            int sg = s.sign_at(x);
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++v;
            last = sg;
        }
        return v;
    }
    int variations_at_infinity(bool positive) const {
        int v = 0, last = 0;
        for (const auto& s : seq_) {
            int sg = sgn(s.lead());
            if (!positive && s.degree() % 2) sg = -sg;
            if (last != 0 && sg != last) ++v;
            last = sg;
        }
        return v;
    }

    /// Distinct real roots in (a, b]; nullopt endpoints are -inf / +inf.
    int count(const std::optional<Rational>& a, const std::optional<Rational>& b) const {
        if (a && b && *a >= *b) throw std::domain_error("sturm_count needs a < b");
        int va = a ? variations_at(*a) : variations_at_infinity(false);
        int vb = b ? variations_at(*b) : variations_at_infinity(true);
        return va - vb;
    }

private:
    std::vector<IntPoly> seq_;
};

inline int sturm_count(const IntPoly& p, const std::optional<Rational>& a = std::nullopt,
                       const std::optional<Rational>& b = std::nullopt) {
    return SturmSequence(p).count(a, b);
}

/// Closed interval [lo, hi] holding exactly one root of a squarefree
/// polynomial. Either lo == hi (a rational root) or lo < hi and neither
/// endpoint is a root.
struct RootInterval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    double approx() const { return midpoint().get_d(); }
};

namespace detail {

/// Number of sign changes in the coefficient sequence.
inline int sign_variations(const IntPoly& p) {
    int v = 0, last = 0;
    for (const auto& a : p.coeffs()) {
        int s = sgn(a);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

/// Descartes bound for roots in (0, 1).
inline int descartes_unit(const IntPoly& p) { return sign_variations(p.reversed().taylor_shift(1)); }

/// Roots of a squarefree p with p(0) != 0 in (0, +inf).
inline std::vector<RootInterval> isolate_positive(const IntPoly& p) {
    std::vector<RootInterval> out;
    if (p.degree() < 1) return out;
    // Positive roots lie below 2^k with k from a Cauchy-type bound.
    long k = 1;
    const long lb = static_cast<long>(bit_length(p.lead()));
    for (int i = 0; i < p.degree(); ++i) {
        if (p[static_cast<std::size_t>(i)] == 0) continue;
        long bi = static_cast<long>(bit_length(p[static_cast<std::size_t>(i)]));
        k = std::max(k, bi - lb + 2);
    }
    // q(x) = p(2^k x) scaled to integers has its positive roots in (0, 1)
    std::vector<BigInt> c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] <<= static_cast<unsigned long>(k) * i;
    IntPoly q = IntPoly(std::move(c)).primitive();

    struct Node {
        IntPoly poly;
        BigInt num;  // interval (num / 2^depth, (num + 1) / 2^depth) in scaled units
        unsigned long depth;
    };
    std::vector<Node> stack;
    stack.push_back({q, BigInt(0), 0});
    auto scaled = [&](const BigInt& num, unsigned long depth) {
        Rational r(num);
        if (static_cast<long>(depth) > k) {
            mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), depth - static_cast<unsigned long>(k));
        } else {
            mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(k) - depth);
        }
        r.canonicalize();
        return r;
    };
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        int v = descartes_unit(node.poly);
        if (v == 0) continue;
        if (v == 1) {
            out.push_back({scaled(node.num, node.depth), scaled(node.num + 1, node.depth)});
            continue;
        }
        const int n = node.poly.degree();
        // left half: 2^n p(x/2); right half: left(x + 1)
        std::vector<BigInt> lc = node.poly.coeffs();
        for (int i = 0; i <= n; ++i) lc[static_cast<std::size_t>(i)] <<= static_cast<unsigned long>(n - i);
        IntPoly left(std::move(lc));
        IntPoly right = left.taylor_shift(1);
        const BigInt lnum = node.num * 2;
        if (right.trailing() == 0) {
            Rational root = scaled(lnum + 1, node.depth + 1);
            out.push_back({root, root});
            right = right.shift_down(1);
        }
        stack.push_back({right.primitive(), lnum + 1, node.depth + 1});
        stack.push_back({left.primitive(), lnum, node.depth + 1});
    }
    return out;
}

}  // namespace detail

/// One isolating interval per distinct real root, sorted left to right.
inline std::vector<RootInterval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    IntPoly q = squarefree_part(p);
    std::vector<RootInterval> out;
    if (q.degree() < 1) return out;
    bool zero_root = false;
    if (q.trailing() == 0) {
        zero_root = true;
        q = q.shift_down(q.low_order());
    }
    for (const auto& r : detail::isolate_positive(q.reflect())) out.push_back({-r.hi, -r.lo});
    if (zero_root) out.push_back({Rational(0), Rational(0)});
    for (const auto& r : detail::isolate_positive(q)) out.push_back(r);
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    // Neighbours may share an endpoint (a rational root found at a bisection
    // point); halve the open intervals until the closed ones are disjoint.
    std::optional<SturmSequence> sturm;
    auto halve = [&](RootInterval& iv) {
        if (iv.exact()) return;
        if (!sturm) sturm.emplace(q);
        Rational mid = iv.midpoint();
        if (q.sign_at(mid) == 0) {
            iv = {mid, mid};
        } else if (sturm->count(iv.lo, mid) == 1) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    };
    for (std::size_t k = 0; k + 1 < out.size(); ++k) {
        while (out[k].hi >= out[k + 1].lo) {
            halve(out[k]);
            halve(out[k + 1]);
        }
    }
    return out;
}

inline int real_root_count(const IntPoly& p) { return static_cast<int>(isolate_real_roots(p).size()); }

/// Bisect until the width is at most `width`. `p` must be squarefree with a
/// single root in the interval.
inline RootInterval refine(const IntPoly& p, RootInterval iv, const Rational& width) {
    if (iv.exact()) return iv;
    int slo = p.sign_at(iv.lo);
    if (slo == 0) return {iv.lo, iv.lo};
    while (iv.width() > width) {
        Rational mid = iv.midpoint();
        int sm = p.sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

}  // namespace multibrot::exact
