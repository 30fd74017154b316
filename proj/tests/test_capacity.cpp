#include "multibrot/capacity/diameter.hpp"
#include "multibrot/capacity/fekete.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace multibrot;
using namespace multibrot::capacity;
using exact::make_rational;

namespace {

// Fekete points of [-1, 1] are +-1 and the zeros of P'_{n-1} (Legendre);
// find the zeros by bisection on a fine grid in long double.
std::vector<long double> legendre_fekete(unsigned n) {
    auto dlegendre = [n](long double x) {
        // P'_{m}(x) via the recurrence for P_k and (1 - x^2) P'_m = m (P_{m-1} - x P_m)
        unsigned m = n - 1;
        long double p0 = 1, p1 = x;
        if (m == 0) return 0.0L;
        for (unsigned k = 2; k <= m; ++k) {
            long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        return m * (p0 - x * p1) / (1 - x * x);
    };
    std::vector<long double> z{-1.0L};
    const int grid = 20000;
    for (int i = 0; i < grid; ++i) {
        // half-step offset keeps the symmetric zero at 0 off the grid
        long double lo = -1 + (2.0L * i + 1) / (grid + 1), hi = -1 + (2.0L * i + 3) / (grid + 1);
        if ((dlegendre(lo) > 0) == (dlegendre(hi) > 0)) continue;
        for (int it = 0; it < 200; ++it) {
            long double mid = (lo + hi) / 2;
            if ((dlegendre(mid) > 0) == (dlegendre(lo) > 0)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        z.push_back((lo + hi) / 2);
    }
    z.push_back(1.0L);
    return z;
}

double diameter_of(const std::vector<long double>& z) {
    long double s = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) s += std::log(std::abs(z[i] - z[j]));
    long double n = z.size();
    return static_cast<double>(std::exp(2 * s / (n * (n - 1))));
}

}  // namespace

TEST(DiameterTable, Examples) {
    DiameterTable t = D_table(12);
    EXPECT_EQ(t[2], 1);
    EXPECT_EQ(t[3], make_rational(1, 16));
    EXPECT_EQ(t[4], make_rational(1, 3125));
    EXPECT_TRUE(t.consistent());
    EXPECT_THROW(D_table(1), std::invalid_argument);
    EXPECT_EQ(t.to_json()["4"], "1/3125");
}

TEST(DiameterTable, AgreesWithLegendreFeketePoints) {
    for (unsigned n = 2; n <= 12; ++n) {
        auto z = legendre_fekete(n);
        ASSERT_EQ(z.size(), n);
        EXPECT_NEAR(diameter_of(z), dn_interval(-1, 1, n, 128).approx(), 1e-12) << n;
    }
}

TEST(Dn, Examples) {
    DyadicInterval a = dn_interval(0, 4, 2, 64);
    EXPECT_EQ(a.lo_rational(), 4);
    EXPECT_EQ(a.hi_rational(), 4);
    DyadicInterval b = dn_interval(-1, 1, 3, 128);
    EXPECT_NEAR(b.approx(), std::cbrt(2.0), 1e-15);
    // 2^(1/3) lies inside: cube the endpoints
    EXPECT_LT(exact::pow(b.lo_rational(), 3), 2);
    EXPECT_GT(exact::pow(b.hi_rational(), 3), 2);
    EXPECT_EQ(transfinite_diameter(0, 1), make_rational(1, 4));
    EXPECT_THROW(dn_interval(1, 1, 3, 64), std::invalid_argument);
}

TEST(Dn, WidthBound) {
    for (unsigned bits : {32u, 64u, 200u}) {
        for (unsigned n = 2; n <= 20; ++n) {
            DyadicInterval v = dn_interval(make_rational(-1, 3), make_rational(5, 7), n, bits);
            Rational bound = v.hi_rational() / (BigInt(1) << (bits - 2));
            EXPECT_LE(v.width(), bound) << n << " " << bits;
        }
    }
}

TEST(Dn, MonotoneInN) {
    for (unsigned n = 2; n < 50; ++n)
        EXPECT_TRUE(dn_interval(0, 1, n + 1, 96).certainly_less(dn_interval(0, 1, n, 96))) << n;
}

TEST(Dn, ScalingCovariance) {
    for (unsigned n = 2; n <= 12; ++n) {
        for (long w : {1L, 2L, 8L, 1024L}) {
            DyadicInterval scaled = dn_interval(Rational(3), Rational(3 + w), n, 100);
            DyadicInterval unit = dn_interval(0, 1, n, 100) * DyadicInterval::exact(w, 100);
            EXPECT_TRUE(scaled.lo() == unit.lo() && scaled.hi() == unit.hi()) << n << " " << w;
        }
        DyadicInterval odd = dn_interval(0, make_rational(1, 3), n, 100);
        DyadicInterval ref = dn_interval(0, 1, n, 100);
        DyadicInterval tripled = odd * DyadicInterval::exact(3, 100);
        EXPECT_FALSE(tripled.certainly_less(ref) || tripled.certainly_greater(ref)) << n;
    }
}

TEST(TauSigma, Examples) {
    EXPECT_EQ(tau(2, 64).lo_rational(), 1);
    EXPECT_EQ(tau(2, 64).hi_rational(), 1);
    EXPECT_NEAR(tau(3, 64).approx(), std::pow(2.0, -2.0 / 3), 1e-15);
    EXPECT_EQ(sigma(2, 64).lo_rational(), 4);
    EXPECT_EQ(sigma(2, 64).hi_rational(), 4);
    for (unsigned d = 2; d <= 30; ++d) {
        double closed = std::pow(d, d / (d - 1.0)) * (std::pow(2.0, 1.0 / (d - 1)) - 1);
        EXPECT_NEAR(sigma(d, 96).approx(), closed, 1e-12 * closed) << d;
    }
}

TEST(TauSigma, LimitsAndMonotonicity) {
    DyadicInterval prev_gap = tau(2, 96) - DyadicInterval::from_rational(make_rational(1, 4), 96);
    for (unsigned n = 3; n <= 200; ++n) {
        DyadicInterval gap = tau(n, 96) - DyadicInterval::from_rational(make_rational(1, 4), 96);
        EXPECT_TRUE(gap.certainly_less(prev_gap)) << n;
        EXPECT_TRUE(gap.certainly_greater(Rational(0))) << n;
        prev_gap = gap;
    }
    EXPECT_TRUE(prev_gap.certainly_less(make_rational(2, 100)));

    DyadicInterval ln2 = exact::ln2_enclosure(96);
    EXPECT_NEAR(ln2.approx(), std::log(2.0), 1e-16);
    DyadicInterval prev = sigma(2, 96);
    for (unsigned d = 3; d <= 100; ++d) {
        DyadicInterval s = sigma(d, 96);
        EXPECT_TRUE(s.certainly_less(prev)) << d;
        EXPECT_TRUE(s.certainly_greater(ln2)) << d;
        prev = s;
    }
    EXPECT_TRUE((prev - ln2).certainly_less(make_rational(5, 100)));
}

TEST(Inequality41, Examples) {
    auto a = inequality_41(6, 3, 64);
    EXPECT_FALSE(a.holds);
    EXPECT_TRUE(a.product.certainly_less(Rational(1)));
    auto b = inequality_41(4, 4, 64);
    EXPECT_FALSE(b.holds);
    auto c = inequality_41(4, 3, 64);
    EXPECT_TRUE(c.holds);
    EXPECT_NEAR(c.product.approx(), 1.04, 0.01);
    EXPECT_THROW(inequality_41(5, 3), std::invalid_argument);
    EXPECT_EQ(a.to_json()["verdict"], "fails");
    // closed forms in floating point
    EXPECT_NEAR(a.product.approx(), std::pow(6.0, 1.2) * (std::pow(2.0, 0.2) - 1) * std::pow(2.0, -2.0 / 3), 1e-14);
    EXPECT_NEAR(b.product.approx(), std::pow(4.0, 4.0 / 3) * (std::cbrt(2.0) - 1) * std::pow(5.0, -5.0 / 12), 1e-14);
}

TEST(DiscriminantBound, CaseFourBound) {
    DyadicInterval u = discriminant_upper_bound(BigInt(256), 4, 3, 256);
    EXPECT_TRUE(u.certainly_less(Rational(BigInt(1) << 17)));
    EXPECT_TRUE(u.certainly_greater(Rational(BigInt(1) << 16)));
    double closed = std::pow(2.0, 28) * std::pow(std::cbrt(2.0) - 1, 6);
    EXPECT_NEAR(u.approx(), closed, 1e-6);
}

TEST(Fekete, Examples) {
    auto two = fekete_oracle(-3, 5, 2);
    EXPECT_EQ(two.points, (std::vector<double>{-3, 5}));
    EXPECT_DOUBLE_EQ(two.value, 8);
    auto three = fekete_oracle(-1, 1, 3);
    EXPECT_NEAR(three.points[1], 0, 1e-12);
    EXPECT_NEAR(three.value, std::cbrt(2.0), 1e-12);
    auto four = fekete_oracle(-1, 1, 4);
    EXPECT_NEAR(four.points[1], -1 / std::sqrt(5.0), 1e-9);
    EXPECT_NEAR(four.points[2], 1 / std::sqrt(5.0), 1e-9);
    EXPECT_NEAR(std::exp(four.log_product), 64 * std::pow(5.0, -2.5), 1e-12);
    EXPECT_NEAR(four.value, 2 * std::pow(5.0, -5.0 / 12), 1e-12);
    EXPECT_TRUE(four.endpoints_attained);
}

TEST(Fekete, ThreePointGridSearch) {
    // exhaustive grid over the middle point; endpoints are forced
    double best = 0, arg = 0;
    for (int i = 1; i < 20000; ++i) {
        double x = -1 + i / 10000.0;
        double p = std::abs((x + 1) * (1 - x) * 2);
        if (p > best) {
            best = p;
            arg = x;
        }
    }
    EXPECT_NEAR(arg, 0, 1e-4);
    EXPECT_NEAR(std::cbrt(best), fekete_oracle(-1, 1, 3).value, 1e-9);
}

TEST(Fekete, AgreesWithExactDiameter) {
    for (unsigned n = 2; n <= 8; ++n) {
        EXPECT_NEAR(fekete_oracle(-1, 1, n).value, dn_interval(-1, 1, n, 128).approx(), 1e-6) << n;
        EXPECT_NEAR(fekete_oracle(0, 1, n).value, dn_interval(0, 1, n, 128).approx(), 1e-6) << n;
    }
}

TEST(Fekete, DeterministicForSeed) {
    auto a = fekete_oracle(-1, 1, 7, 5, 42);
    auto b = fekete_oracle(-1, 1, 7, 5, 42);
    EXPECT_EQ(a.points, b.points);
    EXPECT_EQ(a.log_product, b.log_product);
    EXPECT_THROW(fekete_oracle(-1, 1, 13), std::invalid_argument);
}
