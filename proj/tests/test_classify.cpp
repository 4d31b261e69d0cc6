#include "common.hpp"

using namespace cubaff;
using cubaff::test::named;
using cubaff::test::q;
using cubaff::test::rc;

TEST(Branch, SpecExamples)
{
    EXPECT_EQ(branch(rc(0, 0, 1, 0, 0, 0)).kind, Family::F1);
    EXPECT_EQ(branch(rc(0, 0, 0, 0, 0, 1)).kind, Family::F5);
    FamilyTag u = branch(rc(0, 0, 0, 0, 1, 0));
    EXPECT_EQ(u.name(), "Uncovered");
    EXPECT_EQ(u.label(), "U2");
    EXPECT_THROW(branch(rc(0, 0, -1, 0, 0, 0)), Error);
}

TEST(Branch, RepresentativesLandInTheirFamily)
{
    for (const auto& n : concrete_representatives())
        EXPECT_EQ(branch(n.params).name(), "F" + n.name.substr(1, 1)) << n.name;
}

TEST(Canonicalize, Idempotent)
{
    for (const auto& n : concrete_representatives()) {
        auto rep = canonicalize(n.params);
        EXPECT_EQ(rep.certificate.status, Certificate::Status::ExactVerified) << n.name;
        EXPECT_TRUE(rep.witness.empty()) << n.name << ": " << describe(rep.witness);
        EXPECT_EQ(rep.representative, detail::widen(n.params)) << n.name;
    }
}

TEST(Canonicalize, FamilyOneFolds)
{
    auto rep = canonicalize(rc(0, 0, 1, 0, 0, 0));
    EXPECT_EQ(rep.family.kind, Family::F1);
    EXPECT_EQ(rep.param("epsilon")->value, RatInterval(q(-1)));
    EXPECT_EQ(rep.param("a")->value, RatInterval(q(4)));
    EXPECT_EQ(rep.certificate.status, Certificate::Status::ExactVerified);
}

TEST(Canonicalize, FlowPerturbedF3)
{
    auto r = flow(1, q(1), flow(3, q(2), named("C3_2")));
    auto rep = canonicalize(r);
    EXPECT_EQ(rep.family.kind, Family::F3);
    EXPECT_EQ(rep.param("e")->value, RatInterval(q(2)));
    EXPECT_TRUE(rep.certificate.verified());
    EXPECT_TRUE(rep.replay.verified());
}

TEST(Canonicalize, IrrationalWitnessIsIntervalVerified)
{
    auto rep = canonicalize(rc(1, 0, 1, 0, 0, 0), dyadic(20));
    EXPECT_EQ(rep.family.kind, Family::F1);
    EXPECT_EQ(rep.certificate.status, Certificate::Status::IntervalVerified);
    EXPECT_LE(rep.certificate.bound, dyadic(20));
}

TEST(Canonicalize, UncoveredIsFlagged)
{
    auto rep = canonicalize(rc(0, 0, 0, 0, 1, 0));
    EXPECT_EQ(rep.certificate.status, Certificate::Status::Unresolved);
    EXPECT_TRUE(rep.replay.verified());
    ASSERT_EQ(rep.extensions.size(), 1u);
    EXPECT_EQ(rep.extensions[0], kBeyondFlag);
}

// Orbit stability: a random orbit move lands on the same family and parameters.
TEST(Canonicalize, OrbitStable)
{
    RatSampler rng(23);
    for (int n = 0; n < 40; ++n) {
        auto r = rng.reduced(4);
        auto moved = r;
        for (int k = rng.index(1, 3); k > 0; --k) {
            int i = rng.index(1, 4);
            moved = flow(i, rng.flow_parameter(i), moved);
        }
        auto a = canonicalize(r), b = canonicalize(moved);
        ASSERT_EQ(a.family, b.family);
        ASSERT_EQ(a.parameters.size(), b.parameters.size());
        for (std::size_t k = 0; k < a.parameters.size(); ++k) {
            const auto &pa = a.parameters[k].value, &pb = b.parameters[k].value;
            ASSERT_FALSE(pa.hi() < pb.lo() || pb.hi() < pa.lo()) << a.parameters[k].name;
        }
    }
}

TEST(Equivalent, SpecExamples)
{
    auto r = rc(1, 2, 3, -1, q(1, 2), 4);
    EXPECT_EQ(equivalent(r, flow(4, q(3), r)).kind, Verdict::Kind::Equivalent);
    Verdict v = equivalent(named("C5"), named("C7"));
    EXPECT_EQ(v.kind, Verdict::Kind::Distinct);
    EXPECT_FALSE(v.datum.empty());
}

// Under the full affine group the reflection (x, y) -> (-x, 2x + y) joins f and -f.
TEST(Equivalent, ReflectJoinsF4Signs)
{
    Verdict v = equivalent(named("C4_1"), named("C4_-1"));
    EXPECT_EQ(v.kind, Verdict::Kind::Equivalent);
    auto g = witness_map<Rat>(v.witness);
    EXPECT_TRUE(same_curve(pullback(g, named("C4_1").curve()), named("C4_-1").curve()));
}

TEST(Isotropy, Families)
{
    EXPECT_EQ(isotropy(canonicalize(family1(q(5), q(1)))).kind, IsotropyDescription::Kind::Trivial);
    EXPECT_EQ(isotropy(canonicalize(named("C5"))).kind, IsotropyDescription::Kind::OneParam);
    EXPECT_EQ(isotropy(canonicalize(named("C7"))).kind, IsotropyDescription::Kind::TwoParam);
    EXPECT_EQ(isotropy(canonicalize(family1(q(2), q(0)))).kind, IsotropyDescription::Kind::Z2);
    EXPECT_THROW(isotropy(canonicalize(rc(0, 0, 0, 0, 1, 0))), Error);
}

TEST(Fold, MapsFamilyOne)
{
    RatSampler rng(9);
    for (int n = 0; n < 20; ++n) {
        Rat a = rng.uniform(-9, 9), b = rng.uniform(-9, 9);
        auto img = pullback(AffineMap<Rat>::fold(), family1(a, b).curve());
        EXPECT_TRUE(same_curve(img, family1(q(4) - a, b + q(4) - q(2) * a).curve()));
    }
}
