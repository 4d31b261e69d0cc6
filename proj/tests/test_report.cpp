#include "common.hpp"

using namespace cubaff;
using cubaff::test::q;
using cubaff::test::rc;

namespace {
void expect_round_trip(const ClassificationReport& rep)
{
    json j = report_to_json(rep);
    ClassificationReport back = report_from_json(j);
    EXPECT_EQ(report_to_json(back), j);
    EXPECT_EQ(back.family, rep.family);
    EXPECT_EQ(back.witness.size(), rep.witness.size());
    EXPECT_EQ(back.representative, rep.representative);
    EXPECT_EQ(back.isotropy, rep.isotropy);
}
} // namespace

TEST(Report, RoundTripRepresentatives)
{
    for (const auto& n : concrete_representatives())
        expect_round_trip(classify_with_isotropy(n.params));
}

TEST(Report, RoundTripRandom)
{
    RatSampler rng(31);
    for (int n = 0; n < 40; ++n)
        expect_round_trip(classify_with_isotropy(rng.reduced(5)));
}

TEST(Report, Deterministic)
{
    auto r = rc(1, 0, 1, 0, 0, 0);
    EXPECT_EQ(report_to_json(canonicalize(r)).dump(), report_to_json(canonicalize(r)).dump());
}

TEST(Report, SchemaKeys)
{
    json j = report_to_json(classify_with_isotropy(rc(0, 0, 0, 0, 0, 1)));
    for (const char* k : {"family", "label", "stratum", "parameters", "signature", "witness", "certificate", "replay",
                          "isotropy", "extensions", "notes", "input", "representative"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["family"], "F5");
    EXPECT_EQ(j["isotropy"]["kind"], "OneParam");
}

TEST(Report, RejectsBadInput)
{
    json j = report_to_json(canonicalize(rc(0, 0, 0, 0, 0, 1)));
    j["label"] = "F9";
    EXPECT_THROW(report_from_json(j), Error);
}
