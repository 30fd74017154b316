#pragma once

// p-adic Newton polygons: the lower convex hull of (i, v_p(a_i)). A hull
// segment of slope s and horizontal length l accounts for l roots of
// valuation -s in every extension of v_p.

#include "multibrot/exact/int_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace multibrot::algebraic {

using exact::BigInt;
using exact::IntPoly;
using exact::Rational;

struct NewtonSegment {
    long x0, x1;
    long y0, y1;
    Rational slope() const { return exact::make_rational(BigInt(y1 - y0), BigInt(x1 - x0)); }
    long length() const { return x1 - x0; }
};

class NewtonPolygon {
public:
    NewtonPolygon(const IntPoly& p, const BigInt& prime) : prime_(prime) {
        if (p.is_zero()) throw std::domain_error("Newton polygon of the zero polynomial");
        if (!exact::is_prime(prime)) throw std::domain_error("Newton polygon needs a prime");
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            points_.push_back({static_cast<long>(i), exact::valuation(p[i], prime)});
        }
        zero_roots_ = points_.front().first;
        // lower hull by monotone chain; collinear middle points dropped
        std::vector<std::pair<long, long>> hull;
        for (const auto& pt : points_) {
            while (hull.size() >= 2) {
                const auto& a = hull[hull.size() - 2];
                const auto& b = hull.back();
                // keep b only if it lies strictly below segment a-pt
                long cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
                if (cross <= 0) {
                    hull.pop_back();
                } else {
                    break;
                }
            }
            hull.push_back(pt);
        }
        for (std::size_t k = 0; k + 1 < hull.size(); ++k)
            segments_.push_back({hull[k].first, hull[k + 1].first, hull[k].second, hull[k + 1].second});
    }

    const BigInt& prime() const { return prime_; }
    const std::vector<std::pair<long, long>>& points() const { return points_; }
    const std::vector<NewtonSegment>& segments() const { return segments_; }
    /// Multiplicity of the root 0 (valuation +infinity), not on the hull.
    long zero_roots() const { return zero_roots_; }
    long length() const {
        long l = 0;
        for (const auto& s : segments_) l += s.length();
        return l;
    }

    /// Valuations of the nonzero roots with multiplicity, ascending.
    std::vector<Rational> root_valuations() const {
        std::vector<Rational> out;
        for (const auto& s : segments_)
            for (long k = 0; k < s.length(); ++k) out.push_back(-s.slope());
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    BigInt prime_;
    std::vector<std::pair<long, long>> points_;
    std::vector<NewtonSegment> segments_;
    long zero_roots_ = 0;
};

inline std::vector<Rational> root_valuations(const IntPoly& p, const BigInt& prime) {
    return NewtonPolygon(p, prime).root_valuations();
}

}  // namespace multibrot::algebraic
