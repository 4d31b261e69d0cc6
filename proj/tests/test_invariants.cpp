#include "common.hpp"

using namespace cubaff;
using cubaff::test::q;
using cubaff::test::rc;

TEST(Deltas, FrozenValues)
{
    EXPECT_EQ(deltas(rc(0, 0, 1, 0, 0, 0)), (DeltaTriple{q(-2), q(4), q(6)}));
    EXPECT_EQ(deltas(rc(0, 0, 0, 0, 0, 1)), (DeltaTriple{q(0), q(0), q(2)}));
    EXPECT_EQ(deltas(rc(0, 0, 0, 0, 0, 0)), (DeltaTriple{q(0), q(0), q(0)}));
}

TEST(InvariantPair, FrozenValues)
{
    InvariantPair p = invariant_pair(rc(0, 0, 1, 0, 0, 0));
    ASSERT_TRUE(p.defined);
    EXPECT_EQ(p.i1, q(1, 432));
    EXPECT_EQ(p.i2, q(1, 24));
    EXPECT_FALSE(invariant_pair(rc(0, 0, 1, 0, -3, 0)).defined);
    InvariantPair z = invariant_pair(rc(1, 2, 0, 3, 4, 5));
    ASSERT_TRUE(z.defined);
    EXPECT_EQ(z.i1, q(0));
    EXPECT_EQ(z.i2, q(0));
}

TEST(Flow, FrozenValues)
{
    auto r = rc(2, -1, 3, q(1, 2), 5, 7);
    EXPECT_EQ(flow(1, q(0), r), r);
    EXPECT_EQ(flow(3, q(2), rc(0, 0, 1, 0, 0, 1)), rc(0, 0, q(1, 2), 0, 0, q(1, 8)));
    EXPECT_EQ(flow(1, q(1), rc(0, 0, 0, 0, 0, 0)), rc(-3, -2, 0, -3, -1, -1));
    EXPECT_THROW(flow(3, q(-1), r), Error);
    EXPECT_THROW(flow(5, q(1), r), Error);
}

TEST(Generators, PrintedValues)
{
    auto t4 = generator(4).at(rc(0, 0, 1, 0, 0, 0));
    EXPECT_EQ(t4, (std::array<Rat, 6>{q(0), q(2), q(1), q(0), q(0), q(0)}));
    auto t1 = generator(1).at(rc(0, 0, 0, 0, 0, 0));
    EXPECT_EQ(t1, (std::array<Rat, 6>{q(-3), q(-2), q(0), q(0), q(0), q(0)}));
    auto t3 = generator(3).at(rc(1, 1, 1, 1, 1, 1));
    EXPECT_EQ(t3, (std::array<Rat, 6>{q(-1), q(-1), q(-1), q(-2), q(-2), q(-3)}));
}

TEST(Generators, SubstitutionMatchesPrinted)
{
    for (const auto& m : generator_mismatches())
        ADD_FAILURE() << "X" << m.generator << " component " << kParamNames[m.component] << ": printed " << m.printed
                      << ", derived " << m.derived;
}

TEST(Brackets, SelfBracketVanishes)
{
    for (int i = 1; i <= 4; ++i)
        EXPECT_TRUE(lie_bracket(generator(i), generator(i)).is_zero());
}

TEST(Brackets, UniformSign)
{
    BracketCheck b = check_bracket_table({generator(1), generator(2), generator(3), generator(4)});
    EXPECT_TRUE(b.issues.empty());
    EXPECT_EQ(std::abs(b.sigma), 1);
}

TEST(Invariance, DirectionalDerivativesVanish)
{
    RatSampler rng(5);
    for (int n = 0; n < 50; ++n) {
        auto r = rng.reduced();
        if (invariant_base(r).is_zero())
            continue;
        for (int i = 1; i <= 4; ++i) {
            EXPECT_TRUE(directional_derivative(generator(i), r, [](const auto& x) { return invariant_i1(x); }).is_zero());
            EXPECT_TRUE(directional_derivative(generator(i), r, [](const auto& x) { return invariant_i2(x); }).is_zero());
        }
    }
}

// Orbit stability: random flow words keep (I1, I2) exactly.
TEST(Invariance, FlowWords)
{
    RatSampler rng(17);
    int checked = 0;
    while (checked < 200) {
        auto r = rng.reduced();
        if (invariant_base(r).is_zero())
            continue;
        auto moved = r;
        for (int k = rng.index(1, 4); k > 0; --k) {
            int i = rng.index(1, 4);
            moved = flow(i, rng.flow_parameter(i), moved);
        }
        ASSERT_EQ(invariant_pair(moved), invariant_pair(r));
        ++checked;
    }
}
