#include "common.hpp"

using namespace cubaff;
using cubaff::test::q;

TEST(Rat, ParseAndNormalize)
{
    EXPECT_EQ(Rat::parse("6/4"), q(3, 2));
    EXPECT_EQ(Rat::parse("-7"), q(-7));
    EXPECT_EQ(q(3, -6).str(), "-1/2");
    EXPECT_THROW(Rat::parse("1/0"), Error);
    EXPECT_THROW(Rat::parse("x"), Error);
    EXPECT_THROW(Rat::parse(""), Error);
}

TEST(Rat, Arithmetic)
{
    EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
    EXPECT_EQ(pow(q(2, 3), 3), q(8, 27));
    EXPECT_EQ(pow(q(2), -2), q(1, 4));
    EXPECT_EQ(dyadic(3), q(1, 8));
    Rat r;
    EXPECT_TRUE(exact_root(q(8, 27), 3, r));
    EXPECT_EQ(r, q(2, 3));
    EXPECT_FALSE(exact_root(q(2), 2, r));
}

TEST(Interval, ArithmeticEnclosesPointwise)
{
    RatInterval a(q(-1), q(2)), b(q(3), q(4));
    RatInterval p = a * b;
    EXPECT_EQ(p.lo(), q(-4));
    EXPECT_EQ(p.hi(), q(8));
    EXPECT_TRUE((a - a).contains_zero());
    EXPECT_EQ(b.certain_sign(), 1);
    EXPECT_EQ(a.certain_sign(), 0);
    EXPECT_THROW(RatInterval(q(1)) / a, Error);
}

TEST(Interval, RoundOutIsOutwardAndKeepsGridPoints)
{
    RatInterval v(q(1, 3), q(2, 3));
    RatInterval r = round_out(v, 4);
    EXPECT_TRUE(r.contains(v));
    EXPECT_LE(r.width() - v.width(), q(2, 16));
    RatInterval g(q(1, 4), q(3, 4));
    EXPECT_EQ(round_out(g, 4), g);
    EXPECT_EQ(dyadic_ceiling(q(3, 1000)), q(1, 256));
    EXPECT_EQ(dyadic_ceiling(q(1, 4)), q(1, 4));
}

TEST(Dual, ExactDerivative)
{
    Dual<Rat> x{q(3), q(1)};
    Dual<Rat> y = x * x * x - q(2) * x;
    EXPECT_EQ(y.v, q(21));
    EXPECT_EQ(y.d, q(25));
}

TEST(UniPoly, GcdAndSquareFree)
{
    UniPoly p{q(-1), q(0), q(1)}; // x^2 - 1
    UniPoly d{q(1), q(2), q(1)};  // (x + 1)^2
    EXPECT_EQ(gcd(p, d), (UniPoly{q(1), q(1)}));
    EXPECT_EQ(square_free_part(d * UniPoly{q(-2), q(1)}).degree(), 2);
}

TEST(Roots, SpecExamples)
{
    EXPECT_TRUE(isolate_real_roots(UniPoly{q(1), q(0), q(1)}).empty());

    auto one = isolate_real_roots(UniPoly{q(-1), q(0), q(0), q(1)});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(one[0].contains(q(1)));

    UniPoly p{q(0), q(-2), q(0), q(1)}; // x^3 - 2x
    auto three = isolate_real_roots(p);
    ASSERT_EQ(three.size(), 3u);
    EXPECT_TRUE(three[1].contains(q(0)));
    EXPECT_LT(three[0].hi(), three[1].lo());
    EXPECT_LT(three[1].hi(), three[2].lo());
    EXPECT_EQ(three[0].lo().sign() * three[2].lo().sign(), -1);
}

TEST(Roots, Refinement)
{
    RatInterval r = refine_root(UniPoly{q(-3), q(1)}, RatInterval(q(0), q(10)), q(1, 100));
    EXPECT_TRUE(r.contains(q(3)));
    EXPECT_LE(r.width(), q(1, 100));

    RatInterval s = refine_root(UniPoly{q(-2), q(0), q(1)}, RatInterval(q(1), q(2)), q(1, 1000));
    EXPECT_LE(s.width(), q(1, 1000));
    EXPECT_LE(s.lo() * s.lo(), q(2));
    EXPECT_GE(s.hi() * s.hi(), q(2));

    RatInterval t = refine_root(UniPoly{q(0), q(-2), q(0), q(1)}, RatInterval(q(-2), q(-1)), q(1, 16));
    EXPECT_LE(t.width(), q(1, 16));
    EXPECT_LE(t.lo() * t.lo(), q(2) + q(1));
    EXPECT_TRUE(t.hi() < q(-1));
}

TEST(Roots, Radical)
{
    Radical e(q(27, 8), 3);
    EXPECT_TRUE(e.exact());
    EXPECT_EQ(e.value(), q(3, 2));
    Radical s(q(3), 2);
    EXPECT_FALSE(s.exact());
    RatInterval v = s.enclose(dyadic(40));
    EXPECT_LE(v.width(), dyadic(40));
    EXPECT_LE(v.lo() * v.lo(), q(3));
    EXPECT_GE(v.hi() * v.hi(), q(3));
    EXPECT_THROW(Radical(q(-1), 2), Error);
}

TEST(Rat, SimplestBetween)
{
    EXPECT_EQ(simplest_between(q(1, 3), q(1, 2)), q(1, 2));
    EXPECT_EQ(simplest_between(q(3, 10), q(4, 10)), q(1, 3));
    EXPECT_EQ(simplest_between(q(-7, 4), q(-3, 2)), q(-3, 2));
    EXPECT_EQ(simplest_between(q(-17, 10), q(-16, 10)), q(-5, 3));
    EXPECT_EQ(simplest_between(q(-1), q(1)), q(0));
    EXPECT_EQ(floor(q(-1, 2)), q(-1));
}

TEST(Roots, RationalRootIsExact)
{
    // (3x - 2)(x^2 - 2)
    UniPoly p{q(4), q(-6), q(-2), q(3)};
    int exact = 0;
    for (const auto& iv : isolate_real_roots(p))
        exact += refine_root(p, iv, dyadic(30)).is_point();
    EXPECT_EQ(exact, 1);
}
