#include "common.hpp"

using namespace cubaff;
using cubaff::test::q;
using cubaff::test::rc;

TEST(DirectionRoots, SumOfCubes)
{
    auto d = direction_roots(parse_poly("x^3 + y^3"));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].a12, q(1));
    EXPECT_TRUE(d[0].a22.is_point());
    EXPECT_EQ(d[0].a22.lo(), q(-1));
}

TEST(DirectionRoots, FilteredOut)
{
    try {
        direction_roots(parse_poly("y^3"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(std::string(e.what()), "no admissible direction");
    }
}

TEST(DirectionRoots, RationalRootFilter)
{
    // 2 - 3t + t^3 = (t - 1)^2 (t + 2); the side condition vanishes at t = 1.
    auto d = direction_roots(parse_poly("2*x^3 - 3*x^2*y + y^3"));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].a22, RatInterval(q(-2)));
}

TEST(DirectionRoots, NeedsYCube)
{
    EXPECT_THROW(direction_roots(parse_poly("x^3 + x^2*y")), Error);
}

TEST(Reduce, AlreadyReduced)
{
    auto c = parse_poly("x^3 + x^2*y - y^2 - x = 0");
    auto res = reduce(c);
    EXPECT_EQ(res.certificate.status, Certificate::Status::ExactVerified);
    EXPECT_TRUE(res.witness.is_identity());
    EXPECT_EQ(res.reduced, rc(0, 0, 1, 1, 0, 0));
}

// Cubic part -x^3 is a triple line; linear maps keep that factorization type.
TEST(Reduce, CuspidalCubicHasNoNormalForm)
{
    auto res = reduce(parse_poly("y^2 = x^3"));
    EXPECT_EQ(res.certificate.status, Certificate::Status::Failed);
    EXPECT_NE(res.certificate.diagnostic.find("triple line"), std::string::npos);
}

TEST(Reduce, ShearCase)
{
    auto c = parse_poly("x^2*y - x = 0");
    auto res = reduce(c);
    ASSERT_TRUE(res.certificate.verified()) << describe(res.certificate);
    EXPECT_TRUE(verify_reduction(c, res));
}

TEST(Reduce, DoubleLineFamily)
{
    // k * l1^2 * l2 for independent rational lines always reduces.
    RatSampler rng(3);
    for (int n = 0; n < 200; ++n) {
        Rat a = rng.nonzero(-5, 5), b = rng.uniform(-5, 5), c = rng.uniform(-5, 5), d = rng.uniform(-5, 5);
        if ((a * d - b * c).is_zero())
            continue;
        auto l1 = AffineMap<Rat>::linear(a, b, c, d);
        auto base = ReducedCubic<Rat>(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5),
                                      rng.uniform(-5, 5), rng.uniform(-5, 5))
                        .curve();
        auto curve = pullback(invert(l1), base);
        auto res = reduce(curve);
        ASSERT_TRUE(res.certificate.verified()) << format_poly(curve) << ": " << describe(res.certificate);
        ASSERT_TRUE(verify_reduction(curve, res));
    }
}

TEST(Reduce, DiscriminantObstruction)
{
    auto c = parse_poly("x^3 + y^3 = 1");
    EXPECT_FALSE(binary_discriminant(c).is_zero());
    auto res = reduce(c);
    EXPECT_EQ(res.certificate.status, Certificate::Status::Failed);
    EXPECT_NE(res.certificate.diagnostic.find("discriminant"), std::string::npos);
    EXPECT_FALSE(res.trace.empty());
}

TEST(Reduce, TripleLine)
{
    auto res = reduce(parse_poly("x^3 + y = 0"));
    EXPECT_EQ(res.certificate.status, Certificate::Status::Failed);
}
