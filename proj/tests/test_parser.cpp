#include "common.hpp"

using namespace cubaff;
using cubaff::test::q;

TEST(Parser, Transliteration)
{
    auto c = parse_poly("x^3 + x^2 y = y^2 + 1");
    EXPECT_EQ(c[0], q(1));
    EXPECT_EQ(c[1], q(1));
    EXPECT_EQ(c[6], q(-1));
    EXPECT_EQ(c[9], q(-1));
    for (int k : {2, 3, 4, 5, 7, 8})
        EXPECT_TRUE(c[k].is_zero());

    auto e = parse_poly("y^2 = x^3 - 3/2 x");
    EXPECT_EQ(e[0], q(-1));
    EXPECT_EQ(e[6], q(1));
    EXPECT_EQ(e[7], q(3, 2));
}

TEST(Parser, DegreeOverflow)
{
    try {
        parse_poly("x^4 + y");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("degree overflow"), std::string::npos);
    }
}

TEST(Parser, Errors)
{
    EXPECT_THROW(parse_poly("x^3 +* y"), ParseError);
    EXPECT_THROW(parse_poly("x^3 = y = 1"), ParseError);
    EXPECT_THROW(parse_poly("z^3"), ParseError);
}

TEST(Format, Canonical)
{
    EXPECT_EQ(format_poly(parse_poly("x^3+x^2*y=1")), "x^3 + x^2*y - 1 = 0");
    EXPECT_EQ(format_poly(parse_poly("-x^3 + 1/2 x y")), "-x^3 + 1/2*x*y = 0");
}

TEST(Format, RoundTripRandom)
{
    RatSampler rng(11);
    for (int i = 0; i < 1000; ++i) {
        auto c = rng.cubic();
        ASSERT_EQ(parse_poly(format_poly(c)), c) << format_poly(c);
    }
}

TEST(Format, JsonRoundTrip)
{
    auto c = parse_poly("x^3 - 2/3*x*y^2 + y = 7");
    EXPECT_EQ(curve_from_json(curve_to_json(c)), c);
}
