#include "common.hpp"

using namespace cubaff;
using cubaff::test::q;
using cubaff::test::rc;

namespace {
Jet6 constant_jet(const Rat& v)
{
    Jet6 j;
    j.y.fill(v);
    return j;
}
} // namespace

TEST(Ode, Checksums)
{
    EXPECT_EQ(ode_residual(constant_jet(q(1))), q(-78));
    EXPECT_EQ(ode_residual(constant_jet(q(0))), q(0));
    EXPECT_EQ(printed_ode().coefficient_sum(), q(-78));
    EXPECT_EQ(derived_ode_residual(constant_jet(q(1))), q(-28));
}

TEST(Ode, DiscrepanciesAreTheTwoKnownCoefficients)
{
    auto d = ode_discrepancies();
    ASSERT_EQ(d.size(), 2u);
    for (const auto& x : d)
        EXPECT_TRUE((x.printed == q(460) && x.derived == q(360)) || (x.printed == q(-300) && x.derived == q(-150)))
            << jet_monomial_str(x.exponent);
}

TEST(Jet, PointExample)
{
    Jet6 j = implicit_jet(rc(0, 0, 1, 0, 0, 0), q(1), q(1));
    EXPECT_TRUE(derived_ode_residual(j).is_zero());
    EXPECT_THROW(implicit_jet(rc(0, 0, 1, 0, 0, 0), q(0), q(0)), Error);
}

TEST(Jet, OffCurvePoint)
{
    EXPECT_THROW(implicit_jet_of(plane_poly(rc(0, 0, 0, 0, 0, 1).curve()), q(0), q(0)), Error);
}

TEST(Jet, EliminantVanishesOnCubicJets)
{
    RatSampler rng(7);
    for (int n = 0; n < 100;) {
        auto r = rng.reduced();
        Rat x = rng.uniform(-9, 9), y = rng.uniform(-9, 9);
        try {
            Jet6 j = implicit_jet(r, x, y);
            ASSERT_TRUE(derived_ode_residual(j).is_zero());
            ++n;
        } catch (const Error&) {
        }
    }
}
