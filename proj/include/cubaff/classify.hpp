#pragma once

#include "cubaff/certificate.hpp"
#include "cubaff/cubic.hpp"
#include "cubaff/invariants.hpp"
#include "cubaff/reduction.hpp"
#include "cubaff/roots.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cubaff {

// ---------------------------------------------------------------------------
// Families and branching

enum class Family { F1, F2, F3, F4, F5, F6, F7, U1, U2 };

inline bool is_uncovered(Family f)
{
    return f == Family::U1 || f == Family::U2;
}

struct FamilyTag
{
    Family kind = Family::F7;

    /// "F1".."F7" or "Uncovered".
    std::string name() const
    {
        static constexpr std::array<const char*, 7> names{"F1", "F2", "F3", "F4", "F5", "F6", "F7"};
        return is_uncovered(kind) ? "Uncovered" : names[static_cast<int>(kind)];
    }

    /// Stratum descriptor for the uncovered strata, empty otherwise.
    std::string stratum() const
    {
        if (kind == Family::U1)
            return "U1: C>0, den<0";
        if (kind == Family::U2)
            return "U2: C=0, den!=0";
        return {};
    }

    /// Short unique label: family name or U1/U2.
    std::string label() const
    {
        if (kind == Family::U1)
            return "U1";
        if (kind == Family::U2)
            return "U2";
        return name();
    }

    static FamilyTag from_label(const std::string& s)
    {
        static constexpr std::array<const char*, 9> labels{"F1", "F2", "F3", "F4", "F5", "F6", "F7", "U1", "U2"};
        for (int k = 0; k < 9; ++k)
            if (s == labels[k])
                return FamilyTag{static_cast<Family>(k)};
        throw Error("unknown family label '" + s + "'");
    }

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

inline void require_normal_form(const ReducedCubic<Rat>& r)
{
    if (r.C().sign() < 0)
        throw Error("normal form needs C >= 0");
}

/// Family of a normal-form cubic. Branches on C and on den = Delta2 - 4 Delta1
/// (the shared base of I1, I2), then on Delta1 and Delta3 when den = 0.
inline FamilyTag branch(const ReducedCubic<Rat>& r)
{
    require_normal_form(r);
    Rat den = invariant_base(r), d1 = delta1(r), d3 = delta3(r);
    if (r.C().sign() > 0) {
        if (den.sign() > 0)
            return {Family::F1};
        if (den.sign() < 0)
            return {Family::U1};
        return {d1.is_zero() ? Family::F3 : Family::F2};
    }
    if (!den.is_zero())
        return {Family::U2};
    if (!d1.is_zero())
        return {d3.is_zero() ? Family::F6 : Family::F4};
    return {d3.is_zero() ? Family::F7 : Family::F5};
}

/// Case number 1..7 selected by the literal Delta1/Delta2/Delta3 conditions,
/// 0 when none applies. Kept for reporting; branch() is what classification uses.
inline int literal_case(const ReducedCubic<Rat>& r)
{
    int c = r.C().sign();
    bool z1 = delta1(r).is_zero(), z2 = delta2(r).is_zero(), z3 = delta3(r).is_zero();
    if (c > 0)
        return !z1 ? 1 : (!z2 ? 2 : 3);
    if (!z1)
        return 0;
    if (!z2)
        return z3 ? 6 : 4;
    return z3 ? 7 : 5;
}

struct Signature
{
    int c = 0, d1 = 0, d2 = 0, d3 = 0, den = 0;
    InvariantPair pair;
    friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature signature(const ReducedCubic<Rat>& r)
{
    return {r.C().sign(), delta1(r).sign(), delta2(r).sign(), delta3(r).sign(), invariant_base(r).sign(),
            invariant_pair(r)};
}

// ---------------------------------------------------------------------------
// Witness words

struct WitnessStep
{
    enum class Kind { Flow, Fold, Flip, Reflect };
    Kind kind = Kind::Flow;
    int flow = 0;
    RatInterval s;

    static WitnessStep flow_step(int i, RatInterval s) { return {Kind::Flow, i, std::move(s)}; }
    static WitnessStep fold() { return {Kind::Fold, 0, {}}; }
    static WitnessStep flip() { return {Kind::Flip, 0, {}}; }
    static WitnessStep reflect() { return {Kind::Reflect, 0, {}}; }

    std::string map_name() const
    {
        switch (kind) {
        case Kind::Fold:
            return "fold";
        case Kind::Flip:
            return "flip";
        case Kind::Reflect:
            return "reflect";
        default:
            return "flow";
        }
    }

    std::string str() const
    {
        if (kind == Kind::Flow)
            return "flow" + std::to_string(flow) + "(" + s.str() + ")";
        return map_name();
    }

    friend bool operator==(const WitnessStep&, const WitnessStep&) = default;
};

namespace detail {

template <class T>
T scalar_of(const RatInterval& iv);

template <>
inline Rat scalar_of<Rat>(const RatInterval& iv)
{
    if (!iv.is_point())
        throw Error("exact replay of an interval parameter");
    return iv.lo();
}

template <>
inline RatInterval scalar_of<RatInterval>(const RatInterval& iv)
{
    return iv;
}

inline RatInterval as_interval(const Rat& v)
{
    return RatInterval(v);
}
inline RatInterval as_interval(const RatInterval& v)
{
    return v;
}

// Outward dyadic rounding keeps interval endpoints short; exact values pass through.
inline Rat tidy(const Rat& v, unsigned)
{
    return v;
}
inline RatInterval tidy(const RatInterval& v, unsigned bits)
{
    return bits ? round_out(v, bits) : v;
}
template <class T>
ReducedCubic<T> tidy(const ReducedCubic<T>& r, unsigned bits)
{
    ReducedCubic<T> out;
    for (int k = 0; k < 6; ++k)
        out[k] = tidy(r[k], bits);
    return out;
}

/// Working precision in bits for a residual target eps.
inline unsigned precision_bits(const Rat& eps)
{
    return static_cast<unsigned>(mpz_sizeinbase(eps.den().get_mpz_t(), 2)) + 32;
}

} // namespace detail

template <class T>
AffineMap<T> step_map(const WitnessStep& st)
{
    switch (st.kind) {
    case WitnessStep::Kind::Fold:
        return AffineMap<T>::fold();
    case WitnessStep::Kind::Flip:
        return AffineMap<T>::flip();
    case WitnessStep::Kind::Reflect:
        return AffineMap<T>::reflect();
    default:
        return flow_map(st.flow, detail::scalar_of<T>(st.s));
    }
}

template <class T>
ReducedCubic<T> apply_step(const WitnessStep& st, const ReducedCubic<T>& r)
{
    return read_reduced(pullback(step_map<T>(st), r.curve()));
}

/// Composite map g1 o g2 o ... o gn; pulling back by it replays the steps in order.
template <class T>
AffineMap<T> witness_map(const std::vector<WitnessStep>& steps)
{
    AffineMap<T> g = AffineMap<T>::identity();
    for (const auto& st : steps)
        g = compose(g, step_map<T>(st));
    return g;
}

inline WitnessStep inverse_step(const WitnessStep& st)
{
    if (st.kind != WitnessStep::Kind::Flow)
        return st; // fold, flip and reflect are involutions
    if (st.flow <= 2)
        return WitnessStep::flow_step(st.flow, -st.s);
    return WitnessStep::flow_step(st.flow, RatInterval(Rat(1)) / st.s);
}

inline std::vector<WitnessStep> inverse_word(const std::vector<WitnessStep>& w)
{
    std::vector<WitnessStep> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(inverse_step(*it));
    return out;
}

inline std::string describe(const std::vector<WitnessStep>& w)
{
    if (w.empty())
        return "identity";
    std::string out;
    for (const auto& st : w)
        out += (out.empty() ? "" : ", ") + st.str();
    return out;
}

// ---------------------------------------------------------------------------
// Reports

struct Param
{
    std::string name;
    RatInterval value;
    bool exact() const { return value.is_point(); }
    friend bool operator==(const Param&, const Param&) = default;
};

struct IsotropyDescription
{
    enum class Kind { Trivial, Z2, OneParam, TwoParam };
    Kind kind = Kind::Trivial;
    std::string form;                // generator formula, empty when trivial
    std::vector<std::string> checked; // sample maps verified by substitution
    std::vector<std::string> extras;  // further verified symmetries outside the family above
    friend bool operator==(const IsotropyDescription&, const IsotropyDescription&) = default;
};

inline const char* isotropy_kind_name(IsotropyDescription::Kind k)
{
    switch (k) {
    case IsotropyDescription::Kind::Trivial:
        return "Trivial";
    case IsotropyDescription::Kind::Z2:
        return "Z2";
    case IsotropyDescription::Kind::OneParam:
        return "OneParam";
    case IsotropyDescription::Kind::TwoParam:
        return "TwoParam";
    }
    return "?";
}

inline constexpr const char* kBeyondFlag = "beyond-paper";

struct ClassificationReport
{
    ReducedCubic<Rat> input;
    FamilyTag family;
    std::vector<Param> parameters;
    Signature signature;
    std::vector<WitnessStep> witness;
    ReducedCubic<RatInterval> representative;
    Certificate certificate;              // Unresolved for the uncovered strata
    Certificate replay;                   // substitution check of the witness, always run
    std::optional<IsotropyDescription> isotropy;
    std::vector<std::string> extensions;
    std::vector<std::string> notes;

    const Param* param(const std::string& name) const
    {
        for (const auto& p : parameters)
            if (p.name == name)
                return &p;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// Canonicalization

namespace detail {

// Exact data the plans are built from.
struct Data
{
    Rat C, den, d1, d3, i1, i2;
    explicit Data(const ReducedCubic<Rat>& r)
        : C(r.C()), den(invariant_base(r)), d1(delta1(r)), d3(delta3(r))
    {
        if (!den.is_zero()) {
            i1 = invariant_i1(r);
            i2 = invariant_i2(r);
        }
    }
};

// Scaling radical of a family, or nullopt when the scaling is rational.
inline std::optional<Radical> scaling_radical(Family f, const Data& v)
{
    switch (f) {
    case Family::F1:
        return Radical(v.den / Rat(12), 2);
    case Family::U1:
        return Radical(abs(v.den) / Rat(12), 2);
    case Family::F2:
        return Radical(v.C * abs(v.d1), 3);
    case Family::F3:
        if (v.d3.is_zero())
            return std::nullopt;
        return Radical(v.C * abs(v.d3) / Rat(2), 4);
    case Family::U2:
        return Radical(abs(v.den) / Rat(4), 2);
    default:
        return std::nullopt;
    }
}

template <class T>
struct Built
{
    T a, d;
    ReducedCubic<T> target;
    std::vector<WitnessStep> post;
};

// Linear part (x, y) -> (a x, (d - a) x + d y) of the normalizing map, the
// discrete maps applied after translating A and B to zero, and the target
// representative expressed through the scaling radical rv.
template <class T>
Built<T> build(Family f, const Data& v, const T& rv)
{
    auto t = [](const Rat& q) { return T(q); };
    Built<T> b{t(Rat(1)), t(Rat(1)), {}, {}};
    auto rep = [&](const T& C, const T& D, const T& E, const T& F) {
        b.target = ReducedCubic<T>(t(Rat(0)), t(Rat(0)), C, D, E, F);
    };
    int s1 = v.d1.sign(), s3 = v.d3.sign();
    switch (f) {
    case Family::F1:
    case Family::U1: {
        b.a = rv;
        b.d = t(abs(v.den) / (Rat(12) * v.C));
        T root = t(abs(v.C * v.d1) / (Rat(2) * abs(v.den))) / rv; // sqrt(3 |I1|)
        if (s1 < 0)
            b.post.push_back(WitnessStep::fold());
        if (f == Family::F1) {
            rep(t(Rat(1)), t(Rat(2)) + t(Rat(24)) * root, t(Rat(0)),
                t(Rat(-1) + Rat(72) * v.i2) + t(Rat(24)) * root);
        } else {
            T D = t(Rat(-4)) + t(Rat(24)) * root;
            rep(t(Rat(1)), D, t(Rat(-6)), t(Rat(72) * v.i2 + Rat(9)) + D);
        }
        break;
    }
    case Family::F2: {
        b.a = rv;
        b.d = rv * rv / t(v.C);
        Rat c(s1 - 1);
        T a4 = rv * rv * rv * rv;
        rep(t(Rat(1)), t(c), t(Rat(-3)), (t(v.d3 * v.C) / a4 + t(Rat(2) * c + Rat(6))) / t(Rat(2)));
        break;
    }
    case Family::F3:
        b.a = rv;
        b.d = rv * rv / t(v.C);
        rep(t(Rat(1)), t(Rat(-1)), t(Rat(-3)), t(Rat(2 + s3)));
        break;
    case Family::F4:
        b.a = t(abs(v.d3) / (Rat(2) * abs(v.d1)));
        b.d = t(Rat(2) * v.d1 * v.d1 / abs(v.d3));
        if (s3 < 0)
            b.post.push_back(WitnessStep::flip());
        rep(t(Rat(0)), t(Rat(s1)), t(Rat(0)), t(Rat(1)));
        break;
    case Family::F5:
        b.d = t(abs(v.d3) / Rat(2));
        if (s3 < 0)
            b.post.push_back(WitnessStep::flip());
        rep(t(Rat(0)), t(Rat(0)), t(Rat(0)), t(Rat(1)));
        break;
    case Family::F6:
        b.d = t(abs(v.d1));
        rep(t(Rat(0)), t(Rat(s1)), t(Rat(0)), t(Rat(0)));
        break;
    case Family::F7:
        rep(t(Rat(0)), t(Rat(0)), t(Rat(0)), t(Rat(0)));
        break;
    case Family::U2: {
        b.a = rv;
        Rat E(v.den.sign());
        if (s1 < 0)
            b.post.push_back(WitnessStep::reflect());
        if (s3 < 0)
            b.post.push_back(WitnessStep::flip());
        if (s1 != 0) {
            b.d = t(abs(v.d1)) / rv;
            rep(t(Rat(0)), t(Rat(1) + E), t(E), t(abs(v.d3) / (Rat(2) * abs(v.d1))) / rv);
        } else {
            b.d = t(s3 != 0 ? Rat(2) * abs(v.d3) / abs(v.den) : Rat(1));
            rep(t(Rat(0)), t(E), t(E), t(Rat(s3 != 0 ? 1 : 0)));
        }
        break;
    }
    }
    return b;
}

template <class T>
struct Attempt
{
    std::vector<WitnessStep> steps;
    ReducedCubic<T> reached, target;
    bool consistent = true; // every component difference may vanish
    Rat bound;              // max |reached - target| over components
};

template <class T>
Attempt<T> attempt(Family f, const Data& v, const ReducedCubic<Rat>& r, const T& rv, unsigned bits = 0)
{
    Built<T> b = build(f, v, rv);
    Attempt<T> out;
    ReducedCubic<T> cur = lift<T>(r);
    auto push = [&](WitnessStep st) {
        if (bits && st.kind == WitnessStep::Kind::Flow)
            st.s = tidy(st.s, bits);
        cur = tidy(apply_step<T>(st, cur), bits);
        out.steps.push_back(std::move(st));
    };
    T one(Rat(1));
    if (!certainly_zero(b.a - one))
        push(WitnessStep::flow_step(3, as_interval(b.a)));
    T s4 = b.d / b.a;
    if (!certainly_zero(s4 - one))
        push(WitnessStep::flow_step(4, as_interval(s4)));
    T u1 = cur.B() / T(Rat(2));
    if (!certainly_zero(u1))
        push(WitnessStep::flow_step(1, as_interval(u1)));
    T u2 = cur.A();
    if (!certainly_zero(u2))
        push(WitnessStep::flow_step(2, as_interval(u2)));
    for (const auto& st : b.post)
        push(st);
    out.reached = cur;
    out.target = tidy(b.target, bits);
    out.bound = Rat(0);
    for (int k = 0; k < 6; ++k) {
        RatInterval diff = as_interval(cur[k] - b.target[k]);
        if (!diff.contains_zero())
            out.consistent = false;
        out.bound = max(out.bound, diff.magnitude());
    }
    return out;
}

inline ReducedCubic<RatInterval> widen(const ReducedCubic<Rat>& r)
{
    return lift<RatInterval>(r);
}

inline std::string component_list(const ReducedCubic<RatInterval>& r)
{
    std::string out = "(";
    for (int k = 0; k < 6; ++k)
        out += (k ? ", " : "") + r[k].str();
    return out + ")";
}

} // namespace detail

/// Normalizes a normal-form cubic to its family representative, recording the
/// witness word and verifying it by substitution (exactly when the scaling is
/// rational, otherwise by interval replay refined until the residual is <= eps).
inline ClassificationReport canonicalize(const ReducedCubic<Rat>& r, const Rat& eps = default_eps())
{
    require_normal_form(r);
    if (eps.sign() <= 0)
        throw Error("eps must be positive");
    ClassificationReport rep;
    rep.input = r;
    rep.family = branch(r);
    rep.signature = signature(r);
    Family f = rep.family.kind;
    detail::Data v(r);
    auto rad = detail::scaling_radical(f, v);

    if (!rad || rad->exact()) {
        Rat rv = rad ? rad->value() : Rat(1);
        auto at = detail::attempt<Rat>(f, v, r, rv);
        rep.witness = at.steps;
        rep.representative = detail::widen(at.target);
        rep.replay = at.reached == at.target
            ? Certificate::exact()
            : Certificate::unresolved("replay reached " + detail::component_list(detail::widen(at.reached))
                                      + " instead of " + detail::component_list(rep.representative));
    } else {
        Rat width = eps * dyadic(8);
        std::optional<detail::Attempt<RatInterval>> last;
        for (int round = 0; round < 12; ++round, width *= dyadic(16)) {
            unsigned bits = detail::precision_bits(eps) + 16 * static_cast<unsigned>(round);
            auto at = detail::attempt<RatInterval>(f, v, r, rad->enclose(width), bits);
            bool done = !at.consistent || at.bound <= eps;
            last = std::move(at);
            if (done)
                break;
        }
        rep.witness = last->steps;
        rep.representative = last->target;
        if (!last->consistent)
            rep.replay = Certificate::unresolved("replay reached " + detail::component_list(last->reached)
                                                 + ", disjoint from " + detail::component_list(last->target));
        else if (last->bound <= eps)
            rep.replay = Certificate::interval(dyadic_ceiling(last->bound));
        else
            rep.replay = Certificate::unresolved("residual " + last->bound.str() + " above eps after refinement");
    }

    // Family parameters.
    auto exact = [&](const std::string& n, const Rat& q) { rep.parameters.push_back({n, RatInterval(q)}); };
    auto approx = [&](const std::string& n, const RatInterval& q) { rep.parameters.push_back({n, q}); };
    const auto& t = rep.representative;
    switch (f) {
    case Family::F1:
        exact("epsilon", Rat(v.d1.sign()));
        exact("I1", v.i1);
        exact("I2", v.i2);
        approx("a", t.D());
        approx("b", t.F());
        break;
    case Family::U1:
        exact("epsilon", Rat(v.d1.sign()));
        exact("I1", v.i1);
        exact("I2", v.i2);
        approx("D", t.D());
        approx("F", t.F());
        break;
    case Family::F2:
        exact("c", Rat(v.d1.sign() - 1));
        approx("d", t.F());
        exact("J", v.d3 * v.d3 * v.d3 / (v.C * pow(v.d1, 4)));
        break;
    case Family::F3:
        exact("e", Rat(2 + v.d3.sign()));
        break;
    case Family::F4:
        exact("f", Rat(v.d1.sign()));
        break;
    case Family::F6:
        exact("h", Rat(v.d1.sign()));
        break;
    case Family::U2:
        approx("E", t.E());
        approx("D", t.D());
        approx("F", t.F());
        break;
    default:
        break;
    }

    int lc = literal_case(r);
    int fam = static_cast<int>(f) + 1;
    if (lc != (fam <= 7 ? fam : 0))
        rep.notes.push_back("Delta1-based case conditions select " + (lc ? "case " + std::to_string(lc) : std::string("no case"))
                            + "; den-based branching selects " + rep.family.label());

    if (is_uncovered(f)) {
        rep.extensions.push_back(kBeyondFlag);
        rep.certificate = Certificate::unresolved("stratum " + rep.family.stratum()
                                                  + " lies outside the seven families; extension normal form "
                                                  + describe(rep.replay));
    } else {
        rep.certificate = rep.replay;
    }
    if (f == Family::F1 && v.d1.is_zero())
        rep.notes.push_back("a = 2 boundary of family 1 reached (I1 = 0)");
    return rep;
}

// ---------------------------------------------------------------------------
// Isotropy

namespace detail {

inline bool fixes(const AffineMap<Rat>& g, const CubicCurve<Rat>& c)
{
    return same_curve(pullback(g, c), c);
}

} // namespace detail

/// Stabilizer description for a verified report; every listed generator is
/// replayed by substitution on the representative.
inline IsotropyDescription isotropy(const ClassificationReport& rep)
{
    if (is_uncovered(rep.family.kind))
        throw Error("isotropy not specified for the uncovered stratum");
    if (!rep.certificate.verified())
        throw Error("isotropy needs a verified classification");
    IsotropyDescription out;
    std::optional<ReducedCubic<Rat>> exact_rep;
    {
        ReducedCubic<Rat> e;
        bool ok = true;
        for (int k = 0; k < 6; ++k) {
            ok = ok && rep.representative[k].is_point();
            if (ok)
                e[k] = rep.representative[k].lo();
        }
        if (ok)
            exact_rep = e;
    }
    auto check = [&](const AffineMap<Rat>& g, const std::string& label) {
        if (!exact_rep)
            throw Error("isotropy check needs an exact representative");
        if (!detail::fixes(g, exact_rep->curve()))
            throw Error("isotropy generator " + label + " does not fix the representative");
        out.checked.push_back(label + ": " + describe(g));
    };
    using M = AffineMap<Rat>;
    const std::array<Rat, 3> samples{Rat(2), Rat(1, 3), Rat(-1, 2)};
    std::function<bool(const M&)> in_family = [](const M&) { return false; };

    switch (rep.family.kind) {
    case Family::F1: {
        const Param* a = rep.param("a");
        if (a && a->exact() && a->value.lo() == Rat(2)) {
            out.kind = IsotropyDescription::Kind::Z2;
            out.form = "{Id, T}, T(x,y) = (-x-2, 2x+y+2)";
            check(M::fold(), "T");
            in_family = [](const M& g) { return g == M::fold(); };
        }
        break;
    }
    case Family::F5:
        out.kind = IsotropyDescription::Kind::OneParam;
        out.form = "T_a(x,y) = (a x, (a^-2 - a) x + a^-2 y), a != 0";
        for (const Rat& a : samples)
            check(M::linear(a, Rat(0), pow(a, -2) - a, pow(a, -2)), "a=" + a.str());
        in_family = [](const M& g) {
            return g.a12.is_zero() && g.alpha.is_zero() && g.beta.is_zero() && g.a22 == pow(g.a11, -2)
                && g.a21 == pow(g.a11, -2) - g.a11;
        };
        break;
    case Family::F6:
        out.kind = IsotropyDescription::Kind::OneParam;
        out.form = "T_a(x,y) = (a x, (a^-1 - a) x + a^-1 y), a != 0";
        for (const Rat& a : samples)
            check(M::linear(a, Rat(0), pow(a, -1) - a, pow(a, -1)), "a=" + a.str());
        in_family = [](const M& g) {
            return g.a12.is_zero() && g.alpha.is_zero() && g.beta.is_zero() && g.a22 == pow(g.a11, -1)
                && g.a21 == pow(g.a11, -1) - g.a11;
        };
        break;
    case Family::F7: {
        out.kind = IsotropyDescription::Kind::TwoParam;
        out.form = "T_{a,b}(x,y) = (a x, a(b-1) x + a b y), a, b != 0";
        const std::array<std::pair<Rat, Rat>, 3> ab{{{Rat(2), Rat(3)}, {Rat(1, 2), Rat(-1)}, {Rat(-3), Rat(1, 4)}}};
        for (const auto& [a, b] : ab)
            check(M::linear(a, Rat(0), a * (b - Rat(1)), a * b), "(a,b)=(" + a.str() + "," + b.str() + ")");
        in_family = [](const M& g) {
            return g.a12.is_zero() && g.alpha.is_zero() && g.beta.is_zero() && !g.a11.is_zero()
                && !g.a22.is_zero() && g.a21 == g.a22 - g.a11;
        };
        break;
    }
    default:
        break;
    }

    // Further discrete symmetries among the named maps, verified exactly.
    if (exact_rep) {
        const std::array<std::pair<const char*, M>, 5> candidates{{
            {"fold", M::fold()},
            {"flip", M::flip()},
            {"reflect", M::reflect()},
            {"fold o flip", compose(M::fold(), M::flip())},
            {"reflect o flip", compose(M::reflect(), M::flip())},
        }};
        for (const auto& [name, g] : candidates)
            if (!in_family(g) && detail::fixes(g, exact_rep->curve()))
                out.extras.push_back(std::string(name) + ": " + describe(g));
    }
    return out;
}

inline ClassificationReport classify_with_isotropy(const ReducedCubic<Rat>& r, const Rat& eps = default_eps())
{
    ClassificationReport rep = canonicalize(r, eps);
    if (rep.certificate.verified())
        rep.isotropy = isotropy(rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Equivalence

struct Verdict
{
    enum class Kind { Equivalent, Distinct, Unresolved };
    Kind kind = Kind::Unresolved;
    std::string datum;                // separating datum for Distinct, diagnostic for Unresolved
    std::vector<WitnessStep> witness; // Equivalent: pullback along it maps r1 onto r2
    Certificate certificate;
};

inline const char* verdict_name(Verdict::Kind k)
{
    switch (k) {
    case Verdict::Kind::Equivalent:
        return "Equivalent";
    case Verdict::Kind::Distinct:
        return "Distinct";
    case Verdict::Kind::Unresolved:
        return "Unresolved";
    }
    return "?";
}

namespace detail {

// Exact orbit invariants within a family, with names. Families whose discrete
// labels are not invariant (F2's c, F4's f, F6's h) rely on other data.
inline std::vector<std::pair<std::string, Rat>> exact_invariants(Family f, const ReducedCubic<Rat>& r)
{
    Data v(r);
    switch (f) {
    case Family::F1:
    case Family::U1:
        return {{"I1", v.i1}, {"I2", v.i2}};
    case Family::F2:
        return {{"J = Delta3^3/(C Delta1^4)", v.d3 * v.d3 * v.d3 / (v.C * pow(v.d1, 4))}};
    case Family::F3:
        return {{"e = 2 + sgn(Delta3)", Rat(2 + v.d3.sign())}};
    case Family::U2: {
        Rat q = v.d1.is_zero() ? Rat(v.d3.is_zero() ? 0 : 1) : v.d3 * v.d3 / (abs(v.den) * v.d1 * v.d1);
        return {{"sgn(den)", Rat(v.den.sign())}, {"Delta1 vanishes", Rat(v.d1.is_zero() ? 1 : 0)},
                {"Delta3^2/(|den| Delta1^2)", q}};
    }
    default:
        return {};
    }
}

// Discrete map between two representatives of one orbit, when they differ.
inline std::optional<WitnessStep> bridge(const ClassificationReport& a, const ClassificationReport& b)
{
    auto label = [](const ClassificationReport& r, const char* n) { return r.param(n)->value.lo(); };
    switch (a.family.kind) {
    case Family::F2:
        if (label(a, "c") != label(b, "c"))
            return WitnessStep::fold();
        break;
    case Family::F4:
        if (label(a, "f") != label(b, "f"))
            return WitnessStep::reflect();
        break;
    case Family::F6:
        if (label(a, "h") != label(b, "h"))
            return WitnessStep::reflect();
        break;
    default:
        break;
    }
    return std::nullopt;
}

} // namespace detail

/// Cancels adjacent repeats of the discrete involutions (fold, flip, reflect).
inline std::vector<WitnessStep> cancel_involutions(const std::vector<WitnessStep>& w)
{
    std::vector<WitnessStep> out;
    for (const auto& st : w) {
        if (st.kind != WitnessStep::Kind::Flow && !out.empty() && out.back().kind == st.kind)
            out.pop_back();
        else
            out.push_back(st);
    }
    return out;
}

/// Decides affine equivalence of two normal-form cubics. Distinct verdicts name
/// a separating datum; Equivalent verdicts carry a witness replayed by substitution.
inline Verdict equivalent(const ReducedCubic<Rat>& r1, const ReducedCubic<Rat>& r2, const Rat& eps = default_eps())
{
    Verdict out;
    FamilyTag t1 = branch(r1), t2 = branch(r2);
    if (t1 != t2) {
        out.kind = Verdict::Kind::Distinct;
        out.datum = "family tag " + t1.label() + " vs " + t2.label();
        return out;
    }
    auto i1 = detail::exact_invariants(t1.kind, r1), i2 = detail::exact_invariants(t2.kind, r2);
    for (std::size_t k = 0; k < i1.size(); ++k)
        if (i1[k].second != i2[k].second) {
            out.kind = Verdict::Kind::Distinct;
            out.datum = i1[k].first + ": " + i1[k].second.str() + " vs " + i2[k].second.str();
            return out;
        }

    Rat fine = eps * dyadic(32);
    for (int round = 0; round < 4; ++round, fine *= dyadic(32)) {
        ClassificationReport c1 = canonicalize(r1, fine), c2 = canonicalize(r2, fine);
        if (!c1.replay.verified() || !c2.replay.verified()) {
            out.kind = Verdict::Kind::Unresolved;
            out.datum = "canonical replay not verified: " + describe(c1.replay) + " / " + describe(c2.replay);
            return out;
        }
        std::vector<WitnessStep> word = c1.witness;
        if (auto d = detail::bridge(c1, c2))
            word.push_back(*d);
        for (const auto& st : inverse_word(c2.witness))
            word.push_back(st);
        word = cancel_involutions(word);

        // Replay: pullback along the composite must send r1 onto r2.
        AffineMap<RatInterval> g = witness_map<RatInterval>(word);
        ReducedCubic<RatInterval> got = read_reduced(pullback(g, lift<RatInterval>(r1.curve())));
        bool consistent = true, exact = true;
        Rat bound(0);
        for (int k = 0; k < 6; ++k) {
            RatInterval diff = got[k] - RatInterval(r2[k]);
            consistent = consistent && diff.contains_zero();
            exact = exact && diff.is_point();
            bound = max(bound, diff.magnitude());
        }
        if (!consistent) {
            out.kind = Verdict::Kind::Unresolved;
            out.datum = "witness replay misses the second curve: " + detail::component_list(got);
            return out;
        }
        if (exact || bound <= eps) {
            out.kind = Verdict::Kind::Equivalent;
            out.witness = std::move(word);
            out.certificate = exact ? Certificate::exact() : Certificate::interval(dyadic_ceiling(bound));
            if (is_uncovered(t1.kind))
                out.datum = std::string("extension normal form (") + kBeyondFlag + ")";
            return out;
        }
    }
    out.kind = Verdict::Kind::Unresolved;
    out.datum = "witness replay residual stayed above eps";
    return out;
}

// ---------------------------------------------------------------------------
// Representatives

struct NamedRepresentative
{
    std::string name;
    ReducedCubic<Rat> params;
};

/// The eleven concrete representatives with finite parameter sets.
inline std::vector<NamedRepresentative> concrete_representatives()
{
    auto r = [](long D, long E, long F, long C = 1) {
        return ReducedCubic<Rat>(Rat(0), Rat(0), Rat(C), Rat(D), Rat(E), Rat(F));
    };
    return {
        {"C2_{-2,0}", r(-2, -3, 0)}, {"C2_{0,0}", r(0, -3, 0)}, {"C3_1", r(-1, -3, 1)},
        {"C3_2", r(-1, -3, 2)},      {"C3_3", r(-1, -3, 3)},    {"C4_1", r(1, 0, 1, 0)},
        {"C4_-1", r(-1, 0, 1, 0)},   {"C5", r(0, 0, 1, 0)},     {"C6_1", r(1, 0, 0, 0)},
        {"C6_-1", r(-1, 0, 0, 0)},   {"C7", r(0, 0, 0, 0)},
    };
}

/// Family-1 representative x^3 + x^2 y = y^2 + a x + b.
inline ReducedCubic<Rat> family1(const Rat& a, const Rat& b)
{
    return ReducedCubic<Rat>(Rat(0), Rat(0), Rat(1), a, Rat(0), b);
}

} // namespace cubaff
