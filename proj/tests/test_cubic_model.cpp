#include "common.hpp"

using namespace cubaff;
using cubaff::test::q;
using cubaff::test::rc;

TEST(Pullback, IdentityKeepsCurve)
{
    auto c = parse_poly("x^3 - 2*x*y^2 + y - 5 = 0");
    EXPECT_EQ(pullback(AffineMap<Rat>::identity(), c), c);
}

TEST(Pullback, SwapExpandsBinomial)
{
    auto c = pullback(AffineMap<Rat>::swap(), parse_poly("x^3"));
    EXPECT_EQ(c[0], q(1));
    EXPECT_EQ(c[1], q(3));
    EXPECT_EQ(c[2], q(3));
    EXPECT_EQ(c[3], q(1));
}

TEST(Pullback, CompositionOrder)
{
    // Pulling back along g then h equals pulling back along compose(g, h).
    auto g = AffineMap<Rat>::make(q(1), q(2), q(0), q(1), q(3), q(-1));
    auto h = AffineMap<Rat>::make(q(2), q(0), q(1), q(-1), q(0), q(1, 2));
    auto c = parse_poly("x^3 + x^2*y = y^2 + x - 1");
    EXPECT_EQ(pullback(h, pullback(g, c)), pullback(compose(g, h), c));
}

TEST(Maps, ComposeInvert)
{
    auto g = AffineMap<Rat>::make(q(2), q(1), q(-1), q(3), q(5), q(7, 3));
    EXPECT_TRUE(compose(g, invert(g)).is_identity());
    auto t = compose(AffineMap<Rat>::translation(q(1), q(2)), AffineMap<Rat>::translation(q(-3), q(1, 2)));
    EXPECT_EQ(t, AffineMap<Rat>::translation(q(-2), q(5, 2)));
    EXPECT_THROW(invert(AffineMap<Rat>::linear(q(1), q(2), q(2), q(4))), Error);
    EXPECT_TRUE(compose(AffineMap<Rat>::fold(), AffineMap<Rat>::fold()).is_identity());
    EXPECT_TRUE(compose(AffineMap<Rat>::reflect(), AffineMap<Rat>::reflect()).is_identity());
}

TEST(TryAsReduced, SpecExamples)
{
    EXPECT_EQ(*try_as_reduced(parse_poly("x^3 + x^2*y - y^2 = 0")), rc(0, 0, 1, 0, 0, 0));
    EXPECT_EQ(*try_as_reduced(parse_poly("2*x^3 + 2*x^2*y + 2*y^2 = 0")), rc(0, 0, 1, 0, 0, 0));
    EXPECT_FALSE(try_as_reduced(parse_poly("x^3 + 2*x^2*y = 0")));
}

TEST(CubicCurve, RejectsVanishingCubicPart)
{
    EXPECT_THROW(parse_poly("x^2 + y = 1"), Error);
}
