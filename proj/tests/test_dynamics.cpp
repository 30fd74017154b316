#include "multibrot/dynamics/bifurcation.hpp"
#include "multibrot/dynamics/family.hpp"
#include "multibrot/dynamics/orbit.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace multibrot;
using namespace multibrot::dynamics;
using exact::make_rational;

namespace {

double alpha_closed(unsigned d) { return (d - 1.0) * std::pow(d, -static_cast<double>(d) / (d - 1.0)); }
double gamma_closed(unsigned d) { return -(d + 1.0) * std::pow(d, -static_cast<double>(d) / (d - 1.0)); }

}  // namespace

TEST(Constants, MatchClosedForms) {
    for (unsigned d = 2; d <= 10; ++d) {
        Constants k = constants(d);
        EXPECT_NEAR(k.alpha.approx(), alpha_closed(d), 1e-14);
        EXPECT_NEAR(k.beta.approx(), -std::pow(2.0, 1.0 / (d - 1.0)), 1e-14);
        EXPECT_NEAR(k.gamma.approx(), gamma_closed(d), 1e-14);
        EXPECT_NEAR(k.delta.approx(), std::pow(d, -1.0 / (d - 1.0)), 1e-14);
    }
    EXPECT_THROW(constants(1), std::invalid_argument);
}

TEST(Constants, Examples) {
    Constants two = constants(2);
    EXPECT_EQ(two.alpha.rational_value(), make_rational(1, 4));
    EXPECT_EQ(two.beta.rational_value(), -2);
    EXPECT_EQ(two.gamma.rational_value(), make_rational(-3, 4));
    EXPECT_EQ(two.delta.rational_value(), make_rational(1, 2));
    EXPECT_EQ(constants(3).alpha.minpoly(), (IntPoly{-4, 0, 27}));
    EXPECT_EQ(constants(4).beta.minpoly(), (IntPoly{2, 0, 0, 1}));
}

TEST(RealSlice, Examples) {
    auto s2 = real_slice(2);
    EXPECT_EQ(s2.first.rational_value(), -2);
    EXPECT_EQ(s2.second.rational_value(), make_rational(1, 4));
    auto s3 = real_slice(3);
    EXPECT_NEAR(s3.first.approx(), -2 * std::sqrt(3.0) / 9, 1e-15);
    EXPECT_NEAR(s3.second.approx(), 2 * std::sqrt(3.0) / 9, 1e-15);
    auto s4 = real_slice(4);
    EXPECT_NEAR(s4.first.approx(), -std::cbrt(2.0), 1e-15);
    EXPECT_NEAR(s4.second.approx(), 3 * std::pow(4.0, -4.0 / 3), 1e-15);
}

TEST(FixedPoints, Examples) {
    auto fp = real_fixed_points(2, Rational(0));
    ASSERT_EQ(fp.size(), 2u);
    EXPECT_EQ(fp[0].kind, FixedPointClass::superattracting);
    EXPECT_EQ(fp[1].kind, FixedPointClass::repelling);
    EXPECT_EQ(fp[1].multiplier_lo, 2);

    auto quarter = real_fixed_points(2, make_rational(1, 4));
    ASSERT_EQ(quarter.size(), 1u);
    EXPECT_EQ(quarter[0].location.rational_value(), make_rational(1, 2));
    EXPECT_EQ(quarter[0].exact_multiplier, 1);

    auto cubic = real_fixed_points(3, constants(3).alpha);
    bool found = false;
    for (const auto& p : cubic) {
        if (p.kind == FixedPointClass::parabolic) {
            found = true;
            EXPECT_EQ(p.exact_multiplier, 1);
            EXPECT_TRUE(p.location == constants(3).delta);
        }
    }
    EXPECT_TRUE(found);
}

TEST(FixedPoints, ParabolicAtAlpha) {
    for (unsigned d = 2; d <= 8; ++d) {
        auto pts = real_fixed_points(d, constants(d).alpha);
        int parabolic = 0;
        for (const auto& p : pts)
            if (p.kind == FixedPointClass::parabolic && p.exact_multiplier == 1) ++parabolic;
        EXPECT_EQ(parabolic, 1) << d;
    }
}

TEST(FixedPoints, OddDegreeAttractingInsideSlice) {
    for (unsigned d : {3u, 5u, 7u}) {
        double a = alpha_closed(d);
        for (int k = -9; k <= 9; ++k) {
            Rational c = make_rational(static_cast<long>(std::floor(a * k / 10 * 1e6)), 1000000);
            bool attracting = false;
            for (const auto& p : real_fixed_points(d, c))
                attracting = attracting || p.kind == FixedPointClass::attracting || p.kind == FixedPointClass::superattracting;
            EXPECT_TRUE(attracting) << d << " " << c;
        }
    }
}

TEST(GLambda, Examples) {
    EXPECT_EQ(g_lambda(2, Rational(1)), (IntPoly{1, -2, 1}));
    for (unsigned d = 2; d <= 7; ++d) {
        EXPECT_EQ(g_lambda(d, Rational(1)).eval(BigInt(1)), 0);
        Rational lam = make_rational(3, 7);
        IntPoly g = g_lambda(d, lam);
        EXPECT_EQ(Rational(g.eval(BigInt(0))) / 7, lam);
        EXPECT_EQ(Rational(g.eval(BigInt(1))) / 7, Rational(d * d) * (lam - 1));
    }
    IntPoly half = g_lambda(2, make_rational(1, 2));  // 2 g = (1+x)^2 - 8x
    EXPECT_EQ(half, (IntPoly{1, -6, 1}));
}

TEST(LambdaToX, Examples) {
    auto x = lambda_to_x(2, make_rational(1, 2));
    EXPECT_NEAR(x.approx(), 3 - 2 * std::sqrt(2.0), 1e-15);
    EXPECT_THROW(lambda_to_x(2, Rational(1)), std::domain_error);
    auto x4 = lambda_to_x(4, make_rational(1, 2));
    EXPECT_GT(x4.approx(), 0);
    EXPECT_LT(x4.approx(), 1);
    EXPECT_EQ(exact::sturm_count(g_lambda(4, make_rational(1, 2)), Rational(0), Rational(1)), 1);
}

TEST(LambdaToX, Monotone) {
    for (unsigned d : {2u, 4u, 6u}) {
        double prev = -1;
        for (int k = 1; k < 20; ++k) {
            double x = lambda_to_x(d, make_rational(k, 20)).approx();
            EXPECT_GT(x, prev);
            prev = x;
        }
    }
}

TEST(XToC, Endpoints) {
    for (unsigned d = 2; d <= 8; ++d) {
        auto zero = x_to_c(d, Rational(0));
        ASSERT_TRUE(zero.exact.has_value());
        EXPECT_EQ(zero.exact->rational_value(), -1);
        EXPECT_TRUE(zero.enclosure.contains(Rational(-1)));
        auto one = x_to_c(d, Rational(1));
        ASSERT_TRUE(one.exact.has_value());
        EXPECT_TRUE(*one.exact == constants(d).gamma);
        EXPECT_NEAR(one.enclosure.approx(), gamma_closed(d), 1e-14);
    }
    EXPECT_EQ(x_to_c(2, Rational(1)).exact->rational_value(), make_rational(-3, 4));
    EXPECT_THROW(x_to_c(2, Rational(2)), std::domain_error);
}

TEST(XToC, SweepStaysBetweenMinusOneAndGamma) {
    for (unsigned d : {2u, 4u, 6u}) {
        double g = gamma_closed(d), prev = -1;
        for (int k = 1; k < 50; ++k) {
            double c = x_to_c(d, make_rational(k, 50)).enclosure.approx();
            EXPECT_GT(c, -1);
            EXPECT_LT(c, g);
            EXPECT_GT(c, prev);  // monotone sweep from -1 to gamma
            prev = c;
        }
    }
}

TEST(Orbit, Examples) {
    auto a = critical_orbit(2, Rational(-1), 20);
    EXPECT_EQ(a.outcome, OrbitOutcome::cycle);
    EXPECT_EQ(a.preperiod, 0u);
    EXPECT_EQ(a.period, 2u);
    auto b = critical_orbit(2, Rational(-2), 20);
    EXPECT_EQ(b.outcome, OrbitOutcome::cycle);
    EXPECT_EQ(b.preperiod, 2u);
    EXPECT_EQ(b.period, 1u);
    auto c = critical_orbit(4, Rational(-2), 20);
    EXPECT_EQ(c.outcome, OrbitOutcome::escaped);
    EXPECT_EQ(c.iterates[2], 14);
}

TEST(Orbit, EscapeIsMonotoneAfterward) {
    for (unsigned d = 2; d <= 5; ++d) {
        for (long num = -30; num <= 30; ++num) {
            for (long den : {1L, 2L, 3L}) {
                Rational c = make_rational(num, den);
                auto r = critical_orbit(d, c, 12);
                if (r.outcome != OrbitOutcome::escaped) continue;
                Rational z = r.iterates.back();
                // exact powers grow by a factor d in size per step; keep it small
                for (int k = 0; k < 4 && exact::bit_length(z.get_den()) < 4000; ++k) {
                    Rational next = exact::pow(z, static_cast<long>(d)) + c;
                    EXPECT_GT(abs(next), abs(z));
                    z = next;
                }
            }
        }
    }
}

TEST(Pcf, Examples) {
    EXPECT_TRUE(is_pcf(2, Rational(0)));
    EXPECT_FALSE(is_pcf(3, Rational(1)));
    EXPECT_FALSE(is_pcf(2, make_rational(-1, 2)));
    EXPECT_TRUE(is_pcf(2, Rational(-2)));
    EXPECT_TRUE(is_pcf(4, Rational(-1)));
    EXPECT_FALSE(is_pcf(4, Rational(-2)));
    EXPECT_FALSE(is_pcf(3, Rational(-1)));
}

TEST(Probe, Examples) {
    auto k = constants(4);
    auto one = attracting_cycle_probe(4, (k.gamma.approx() + k.alpha.approx()) / 2);
    ASSERT_TRUE(one.has_value());
    EXPECT_EQ(one->period, 1u);
    auto two = attracting_cycle_probe(4, (-1 + k.gamma.approx()) / 2);
    ASSERT_TRUE(two.has_value());
    EXPECT_EQ(two->period, 2u);
    auto sq = attracting_cycle_probe(2, -1.0);
    ASSERT_TRUE(sq.has_value());
    EXPECT_EQ(sq->period, 2u);
    EXPECT_NEAR(sq->multiplier, 0.0, 1e-12);
    EXPECT_FALSE(attracting_cycle_probe(2, 1.0).has_value());
}

TEST(Orbit, EnclosureModeEscapes) {
    // c = alpha(3) + something outside the slice: use the root of 27T^2 - 20
    auto c = signed_root(IntPoly{-20, 0, 27}, 1);
    auto r = critical_orbit(3, c, 200);
    EXPECT_EQ(r.outcome, OrbitOutcome::escaped);
    EXPECT_TRUE(r.certified);
    auto inside = critical_orbit(3, constants(3).alpha, 50);
    EXPECT_NE(inside.outcome, OrbitOutcome::escaped);
}
