#pragma once

// Acceptance corpus shared by the CLI selftest and the acceptance test binary.

#include "cubaff/classify.hpp"
#include "cubaff/invariants.hpp"
#include "cubaff/jet.hpp"
#include "cubaff/random.hpp"
#include "cubaff/reduction.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace cubaff {

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Exit status convention: 0 verified, 2 unresolved or failed certificate.
inline int exit_code(const Certificate& c)
{
    return c.verified() ? 0 : 2;
}

namespace acceptance {

inline Rat eval_curve(const CubicCurve<Rat>& c, const Rat& x, const Rat& y)
{
    Rat acc(0);
    for (int k = 0; k < 10; ++k)
        acc += c[k] * pow(x, kMonomials[k][0]) * pow(y, kMonomials[k][1]);
    return acc;
}

inline CriterionResult ode_oracle(std::uint64_t seed, int n = 500)
{
    CriterionResult r{1, "ODE oracle on exact cubic jets", false, {}, 0};
    RatSampler rs(seed);
    int printed_zero = 0, derived_zero = 0;
    for (int i = 0; i < n; ++i) {
        ReducedCubic<Rat> red = rs.reduced();
        Rat x0, y0;
        do {
            x0 = rs.uniform(-9, 9);
            y0 = rs.uniform(-9, 9);
        } while ((x0 * x0 - red.B() * x0 - Rat(2) * red.C() * y0 - red.E()).is_zero());
        Jet6 j = implicit_jet(red, x0, y0);
        printed_zero += ode_residual(j).is_zero();
        derived_zero += derived_ode_residual(j).is_zero();
    }
    Jet6 ones, zeros;
    for (auto& v : ones.y)
        v = Rat(1);
    Rat r1 = ode_residual(ones), r0 = ode_residual(zeros);
    r.pass = printed_zero == n && r1 == Rat(-78) && r0.is_zero();
    r.detail = "printed relation zero on " + std::to_string(printed_zero) + "/" + std::to_string(n)
             + " jets; eliminant zero on " + std::to_string(derived_zero) + "/" + std::to_string(n)
             + "; all-ones " + r1.str() + "; all-zeros " + r0.str();
    for (const auto& d : ode_discrepancies())
        r.detail += "; coefficient of " + jet_monomial_str(d.exponent) + " printed " + d.printed.str()
                  + " vs eliminant " + d.derived.str();
    return r;
}

inline CriterionResult invariance(std::uint64_t seed, int n = 1000)
{
    CriterionResult r{2, "I1, I2 constant along flow words", false, {}, 0};
    RatSampler rs(seed);
    int ok = 0;
    std::string first_bad;
    for (int i = 0; i < n; ++i) {
        ReducedCubic<Rat> red;
        do
            red = rs.reduced();
        while (invariant_base(red).is_zero());
        ReducedCubic<Rat> moved = red;
        int len = rs.index(1, 4);
        for (int k = 0; k < len; ++k) {
            int f = rs.index(1, 4);
            moved = flow(f, rs.flow_parameter(f), moved);
        }
        if (invariant_pair(moved) == invariant_pair(red))
            ++ok;
        else if (first_bad.empty())
            first_bad = "; first mismatch at sample " + std::to_string(i);
    }
    r.pass = ok == n;
    r.detail = std::to_string(ok) + "/" + std::to_string(n) + " exact matches" + first_bad;
    return r;
}

inline CriterionResult generators()
{
    CriterionResult r{3, "substitution-derived generators equal the listed fields", false, {}, 0};
    auto mism = generator_mismatches();
    r.pass = mism.empty();
    r.detail = mism.empty() ? "4/4 fields agree componentwise" : "";
    for (const auto& m : mism)
        r.detail += "X" + std::to_string(m.generator) + " d/d" + kParamNames[m.component] + ": listed " + m.printed
                  + ", derived " + m.derived + "; ";
    return r;
}

inline CriterionResult brackets()
{
    CriterionResult r{4, "commutator table up to one global sign", false, {}, 0};
    std::array<ParamField, 4> x{generator(1), generator(2), generator(3), generator(4)};
    BracketCheck bc = check_bracket_table(x);
    r.pass = bc.issues.empty() && (bc.sigma == 1 || bc.sigma == -1);
    r.detail = "sigma = " + std::to_string(bc.sigma) + ", " + std::to_string(bc.issues.size()) + " issues";
    for (const auto& s : bc.issues)
        r.detail += "; " + s;
    return r;
}

inline CriterionResult reduction(std::uint64_t seed, int n = 1000)
{
    CriterionResult r{5, "reduction of random cubics", false, {}, 0};
    RatSampler rs(seed);
    int succeeded = 0, reverified = 0, distinct_factors = 0, triple = 0;
    std::string example;
    for (int i = 0; i < n; ++i) {
        CubicCurve<Rat> c = rs.cubic();
        ReductionResult res = reduce(c);
        if (res.certificate.status == Certificate::Status::Failed) {
            (binary_discriminant(c).is_zero() ? triple : distinct_factors)++;
            if (example.empty())
                example = res.certificate.diagnostic;
            continue;
        }
        ++succeeded;
        // Independent check: point evaluation instead of coefficient expansion.
        bool ok = res.reduced.C().sign() >= 0;
        for (int k = 0; k < 8 && ok; ++k) {
            Rat x = rs.uniform(-5, 5), y = rs.uniform(-5, 5);
            const auto& g = res.witness;
            Rat gx = g.a11 * x + g.a12 * y + g.alpha, gy = g.a21 * x + g.a22 * y + g.beta;
            ok = eval_curve(c, gx, gy) == res.scale * eval_curve(res.reduced.curve(), x, y);
        }
        reverified += ok;
    }
    r.pass = succeeded * 100 >= 99 * n && reverified == succeeded;
    r.detail = std::to_string(succeeded) + "/" + std::to_string(n) + " reduced (" + std::to_string(reverified)
             + " re-verified); failures: " + std::to_string(distinct_factors) + " with three distinct factors, "
             + std::to_string(triple) + " with a repeated factor of the wrong type";
    if (!example.empty())
        r.detail += "; e.g. " + example;
    return r;
}

inline CriterionResult idempotence()
{
    CriterionResult r{6, "representatives canonicalize to themselves", false, {}, 0};
    int ok = 0;
    auto reps = concrete_representatives();
    for (const auto& nr : reps) {
        ClassificationReport rep = canonicalize(nr.params);
        bool same = rep.witness.empty() && rep.certificate.status == Certificate::Status::ExactVerified
                 && rep.representative == lift<RatInterval>(nr.params);
        ok += same;
        if (!same)
            r.detail += nr.name + " -> " + rep.family.label() + " " + describe(rep.witness) + "; ";
    }
    r.pass = ok == static_cast<int>(reps.size());
    r.detail = std::to_string(ok) + "/" + std::to_string(reps.size()) + " fixed with identity witness"
             + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

inline CriterionResult distinctness()
{
    CriterionResult r{7, "representatives pairwise distinct", false, {}, 0};
    auto reps = concrete_representatives();
    int distinct = 0, total = 0;
    std::string bad;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            ++total;
            Verdict v = equivalent(reps[i].params, reps[j].params);
            if (v.kind == Verdict::Kind::Distinct && !v.datum.empty())
                ++distinct;
            else
                bad += "; " + reps[i].name + " vs " + reps[j].name + ": " + verdict_name(v.kind) + " via "
                     + describe(v.witness) + " (" + describe(v.certificate) + ")";
        }
    r.pass = distinct == total;
    r.detail = std::to_string(distinct) + "/" + std::to_string(total) + " Distinct with a named datum" + bad;
    return r;
}

inline CriterionResult fold_involution(std::uint64_t seed, int n = 50)
{
    CriterionResult r{8, "fold T is an involution mapping C1_{a,b} to C1_{4-a,b+4-2a}", false, {}, 0};
    using M = AffineMap<Rat>;
    bool inv = compose(M::fold(), M::fold()).is_identity();
    RatSampler rs(seed);
    int ok = 0;
    for (int i = 0; i < n; ++i) {
        Rat a = rs.uniform(-9, 9), b = rs.uniform(-9, 9);
        ok += same_curve(pullback(M::fold(), family1(a, b).curve()),
                         family1(Rat(4) - a, b + Rat(4) - Rat(2) * a).curve());
    }
    r.pass = inv && ok == n;
    r.detail = std::string("T o T ") + (inv ? "= Id" : "!= Id") + "; " + std::to_string(ok) + "/"
             + std::to_string(n) + " image identities";
    return r;
}

inline CriterionResult isotropy_families()
{
    CriterionResult r{9, "one- and two-parameter isotropy families fix their representatives", false, {}, 0};
    int checked = 0, expected = 0;
    std::string bad;
    for (const auto& nr : concrete_representatives()) {
        FamilyTag t = branch(nr.params);
        if (t.kind != Family::F5 && t.kind != Family::F6 && t.kind != Family::F7)
            continue;
        expected += 3;
        try {
            IsotropyDescription d = isotropy(canonicalize(nr.params));
            checked += static_cast<int>(d.checked.size());
        } catch (const Error& e) {
            bad += "; " + nr.name + ": " + e.what();
        }
    }
    // Direct instances quoted alongside the families.
    using M = AffineMap<Rat>;
    ReducedCubic<Rat> c5(Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)), c7;
    bool direct = same_curve(pullback(M::linear(Rat(2), Rat(0), Rat(1, 4) - Rat(2), Rat(1, 4)), c5.curve()), c5.curve())
               && same_curve(pullback(M::linear(Rat(2), Rat(0), Rat(4), Rat(6)), c7.curve()), c7.curve());
    r.pass = checked == expected && direct && bad.empty();
    r.detail = std::to_string(checked) + "/" + std::to_string(expected) + " sample maps verified; direct instances "
             + (direct ? "hold" : "fail") + bad;
    return r;
}

inline CriterionResult known_gap()
{
    CriterionResult r{10, "uncovered stratum surfaced for x^3 + x^2 y = y", false, {}, 0};
    ReducedCubic<Rat> red(Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0));
    ClassificationReport rep = canonicalize(red);
    bool flagged = false;
    for (const auto& e : rep.extensions)
        flagged = flagged || e == kBeyondFlag;
    Rat d1 = delta1(red);
    r.pass = rep.family.name() == "Uncovered" && red.C().is_zero() && d1 == Rat(-1) && flagged
          && exit_code(rep.certificate) == 2 && rep.replay.verified();
    r.detail = "family " + rep.family.name() + " (" + rep.family.stratum() + "), Delta1 = " + d1.str()
             + ", flag " + (flagged ? kBeyondFlag : "missing") + ", exit " + std::to_string(exit_code(rep.certificate))
             + ", extension replay " + describe(rep.replay);
    return r;
}

inline CriterionResult spot_values()
{
    CriterionResult r{11, "spot values of invariants", false, {}, 0};
    ReducedCubic<Rat> red(Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0));
    InvariantPair p = invariant_pair(red);
    DeltaTriple d = deltas(red);
    r.pass = p.defined && p.i1 == Rat(1, 432) && p.i2 == Rat(1, 24) && d == DeltaTriple{Rat(-2), Rat(4), Rat(6)};
    r.detail = "I = (" + p.i1.str() + ", " + p.i2.str() + "), Deltas = (" + d.d1.str() + ", " + d.d2.str() + ", "
             + d.d3.str() + ")";
    return r;
}

} // namespace acceptance

/// Runs every criterion; each result is timed.
inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0)
{
    using namespace acceptance;
    std::vector<std::function<CriterionResult()>> jobs{
        [&] { return ode_oracle(seed); },
        [&] { return invariance(seed); },
        [] { return generators(); },
        [] { return brackets(); },
        [&] { return reduction(seed); },
        [] { return idempotence(); },
        [] { return distinctness(); },
        [&] { return fold_involution(seed); },
        [] { return isotropy_families(); },
        [] { return known_gap(); },
        [] { return spot_values(); },
    };
    std::vector<CriterionResult> out;
    for (auto& job : jobs) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = job();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

inline std::string format_result(const CriterionResult& r, bool timing = true)
{
    std::string t;
    if (timing) {
        char secs[32];
        std::snprintf(secs, sizeof secs, " (%.2fs)", r.seconds);
        t = secs;
    }
    return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + t + ": " + r.detail;
}

} // namespace cubaff
