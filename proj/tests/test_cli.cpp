#include "cli_run.hpp"
#include "common.hpp"

using namespace cubaff;
using cubaff::test::run_cli;

TEST(Cli, ClassifyF5)
{
    auto r = run_cli("classify --format json \"x^3 + x^2*y = 1\"");
    ASSERT_EQ(r.code, 0) << r.out;
    json j = json::parse(r.out);
    EXPECT_EQ(j["family"], "F5");
    EXPECT_TRUE(j["witness"].empty());
    EXPECT_EQ(j["isotropy"]["kind"], "OneParam");
    json core = j;
    core.erase("curve");
    core.erase("reduction");
    EXPECT_EQ(report_to_json(report_from_json(core)), core);
}

TEST(Cli, UncoveredExitsTwo)
{
    auto r = run_cli("classify --format json \"x^3+x^2*y=y\"");
    EXPECT_EQ(r.code, 2);
    json j = json::parse(r.out);
    EXPECT_EQ(j["family"], "Uncovered");
    EXPECT_EQ(j["extensions"][0], kBeyondFlag);
}

TEST(Cli, ReductionFailureExitsTwo)
{
    EXPECT_EQ(run_cli("reduce \"x^3 + y^3 = 1\"").code, 2);
}

TEST(Cli, UsageAndParseErrorsExitOne)
{
    EXPECT_EQ(run_cli("").code, 1);
    EXPECT_EQ(run_cli("frobnicate").code, 1);
    EXPECT_EQ(run_cli("classify --bogus x").code, 1);
    EXPECT_EQ(run_cli("classify \"x^4 + y\"").code, 1);
    EXPECT_EQ(run_cli("--eps -1 classify \"x^3+x^2*y=1\"").code, 1);
    EXPECT_EQ(run_cli("act \"x^3\"").code, 1);
}

TEST(Cli, Equiv)
{
    auto d = run_cli("equiv \"x^3+x^2*y=1\" \"x^3+x^2*y=0\"");
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("Distinct"), std::string::npos);
    auto e = run_cli("equiv --format json \"x^3+x^2*y=x+1\" \"x^3+x^2*y=-x+1\"");
    EXPECT_EQ(json::parse(e.out)["verdict"], "Equivalent");
}

TEST(Cli, Act)
{
    auto r = run_cli("act \"x^3\" --named swap");
    EXPECT_NE(r.out.find("x^3 + 3*x^2*y + 3*x*y^2 + y^3 = 0"), std::string::npos) << r.out;
    auto f = run_cli("act --format json \"x^3 + x^2*y = y^2 + 1\" --flow 3 --s 2");
    EXPECT_EQ(json::parse(f.out)["curve"], "8*x^3 + 8*x^2*y - 4*y^2 - 1 = 0");
}

TEST(Cli, OdeCheck)
{
    auto r = run_cli("ode-check --random 10 --seed 7");
    EXPECT_EQ(r.code, 0);
    int lines = 0;
    for (std::size_t p = 0; (p = r.out.find("derived_residual=0\n", p)) != std::string::npos; ++p)
        ++lines;
    EXPECT_EQ(lines, 10);
}

TEST(Cli, Invariants)
{
    auto r = run_cli("invariants --format json --params 0,0,1,0,0,0");
    json j = json::parse(r.out);
    EXPECT_EQ(j["I1"], "1/432");
    EXPECT_EQ(j["I2"], "1/24");
    EXPECT_EQ(j["Delta1"], "-2");
}

TEST(Cli, BatchIsOrderedAndDeterministic)
{
    auto a = run_cli("classify --format json --batch " CUBAFF_SAMPLES "/batch.txt");
    auto b = run_cli("classify --format json --batch " CUBAFF_SAMPLES "/batch.txt");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 2);
    json j = json::parse(a.out);
    ASSERT_EQ(j.size(), 8u);
    EXPECT_EQ(j[0]["family"], "F5");
    EXPECT_EQ(j[5]["family"], "F7");
    EXPECT_EQ(j[6]["family"], "Uncovered");
}

TEST(Cli, IsotropyOfUncoveredFails)
{
    EXPECT_EQ(run_cli("isotropy \"x^3+x^2*y=y\"").code, 2);
    EXPECT_EQ(run_cli("isotropy \"x^3+x^2*y=0\"").code, 0);
}
