// cubaff: command-line front end for the affine cubic classifier.

#include "cubaff/acceptance.hpp"
#include "cubaff/cubaff.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <variant>

using namespace cubaff;

namespace {

struct Globals
{
    std::string eps_text;
    Rat eps = default_eps();
    std::uint64_t seed = 0;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

struct Outcome
{
    int code = 0;
    json j;
    std::string text;
};

class UsageError : public Error
{
public:
    using Error::Error;
};

std::string approx(const RatInterval& v)
{
    if (v.is_point())
        return v.lo().str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "~%.17g (width %.3g)", v.mid().to_double(), v.width().to_double());
    return buf;
}

std::string params_text(const ReducedCubic<RatInterval>& r)
{
    std::string out;
    for (int k = 0; k < 6; ++k)
        out += (k ? ", " : "") + std::string(kParamNames[k]) + "=" + approx(r[k]);
    return out;
}

std::string params_text(const ReducedCubic<Rat>& r)
{
    return params_text(detail::widen(r));
}

void line(std::string& out, const std::string& key, const std::string& value)
{
    std::string k = key;
    k.resize(std::max<std::size_t>(k.size() + 1, 13), ' ');
    out += k + value + "\n";
}

// Six comma-separated rationals.
std::vector<Rat> rational_list(const std::string& s, std::size_t n, const char* what)
{
    std::vector<Rat> v;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        v.push_back(Rat::parse(item));
    if (v.size() != n)
        throw UsageError(std::string(what) + " needs " + std::to_string(n) + " comma-separated rationals");
    return v;
}

ReducedCubic<Rat> reduced_from_list(const std::string& s)
{
    auto v = rational_list(s, 6, "--params");
    ReducedCubic<Rat> r(v[0], v[1], v[2], v[3], v[4], v[5]);
    require_normal_form(r);
    return r;
}

// Input given either as a polynomial or, with --params, as A,B,C,D,E,F.
struct Input
{
    std::string text;
    bool params = false;
};

struct Reduced
{
    CubicCurve<Rat> curve;
    std::optional<ReductionResult> reduction; // absent for --params input
    ReducedCubic<Rat> reduced;
};

// Reduces the input to normal form or returns a failure outcome.
std::variant<Reduced, Outcome> to_reduced(const Input& in, const Globals& g)
{
    Reduced r;
    if (in.params) {
        r.reduced = reduced_from_list(in.text);
        r.curve = r.reduced.curve();
        return r;
    }
    r.curve = parse_poly(in.text);
    ReductionResult res = reduce(r.curve, g.eps);
    if (!res.certificate.verified()) {
        Outcome o;
        o.code = 2;
        o.j = {{"curve", format_poly(r.curve)}, {"reduction", reduction_to_json(r.curve, res)}};
        line(o.text, "curve", format_poly(r.curve));
        line(o.text, "reduction", describe(res.certificate));
        for (const auto& t : res.trace)
            line(o.text, "trace", t);
        return o;
    }
    r.reduced = res.reduced;
    r.reduction = std::move(res);
    return r;
}

void reduction_text(std::string& out, const Reduced& r)
{
    line(out, "curve", format_poly(r.curve));
    if (r.reduction) {
        line(out, "reduction", describe(r.reduction->certificate));
        line(out, "map", describe(r.reduction->witness));
        line(out, "scale", r.reduction->scale.str());
    }
    line(out, "normal form", params_text(r.reduced));
}

std::string signature_text(const Signature& s)
{
    std::string out = "sgn(C, Delta1, Delta2, Delta3, den) = (" + std::to_string(s.c) + ", " + std::to_string(s.d1)
                    + ", " + std::to_string(s.d2) + ", " + std::to_string(s.d3) + ", " + std::to_string(s.den) + ")";
    if (s.pair.defined)
        out += "; I1 = " + s.pair.i1.str() + ", I2 = " + s.pair.i2.str();
    else
        out += "; I1, I2 undefined";
    return out;
}

void isotropy_text(std::string& out, const IsotropyDescription& iso)
{
    line(out, "isotropy", std::string(isotropy_kind_name(iso.kind)) + (iso.form.empty() ? "" : ": " + iso.form));
    for (const auto& c : iso.checked)
        line(out, "  checked", c);
    for (const auto& e : iso.extras)
        line(out, "  extra", e);
}

void report_text(std::string& out, const ClassificationReport& rep)
{
    line(out, "family", rep.family.name() + (rep.family.stratum().empty() ? "" : " (" + rep.family.stratum() + ")"));
    std::string ps;
    for (const auto& p : rep.parameters)
        ps += (ps.empty() ? "" : ", ") + p.name + "=" + approx(p.value);
    line(out, "parameters", ps.empty() ? "none" : ps);
    line(out, "signature", signature_text(rep.signature));
    line(out, "witness", describe(rep.witness));
    line(out, "representative", params_text(rep.representative));
    line(out, "certificate", describe(rep.certificate));
    line(out, "replay", describe(rep.replay));
    if (rep.isotropy)
        isotropy_text(out, *rep.isotropy);
    for (const auto& e : rep.extensions)
        line(out, "extension", e);
    for (const auto& n : rep.notes)
        line(out, "note", n);
}

Outcome classify_one(const Input& in, const Globals& g, bool with_isotropy = true)
{
    auto red = to_reduced(in, g);
    if (auto* o = std::get_if<Outcome>(&red))
        return *o;
    const Reduced& r = std::get<Reduced>(red);
    ClassificationReport rep = with_isotropy ? classify_with_isotropy(r.reduced, g.eps) : canonicalize(r.reduced, g.eps);
    Outcome o;
    o.code = exit_code(rep.certificate);
    o.j = report_to_json(rep);
    o.j["curve"] = format_poly(r.curve);
    if (r.reduction)
        o.j["reduction"] = reduction_to_json(r.curve, *r.reduction);
    reduction_text(o.text, r);
    report_text(o.text, rep);
    return o;
}

Outcome guarded(const std::function<Outcome()>& fn)
{
    try {
        return fn();
    } catch (const UsageError&) {
        throw;
    } catch (const ParseError& e) {
        Outcome o;
        o.code = 1;
        o.j = {{"error", e.what()}};
        o.text = std::string("error: ") + e.what() + "\n";
        return o;
    } catch (const Error& e) {
        Outcome o;
        o.code = 2;
        o.j = {{"error", e.what()}};
        o.text = std::string("error: ") + e.what() + "\n";
        return o;
    }
}

int emit(const Outcome& o, const Globals& g)
{
    if (g.json())
        std::cout << o.j.dump(2) << "\n";
    else
        std::cout << o.text;
    return o.code;
}

// Batch lines: blank lines and everything after '#' are ignored.
std::vector<std::string> read_batch(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw UsageError("cannot read batch file " + path);
    std::vector<std::string> out;
    std::string s;
    while (std::getline(f, s)) {
        if (auto h = s.find('#'); h != std::string::npos)
            s.resize(h);
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        auto e = s.find_last_not_of(" \t\r");
        out.push_back(s.substr(b, e - b + 1));
    }
    return out;
}

int run_batch(const std::vector<std::string>& lines, bool params, const Globals& g)
{
    std::vector<Outcome> results(lines.size());
    std::atomic<std::size_t> next{0};
    unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), lines.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < lines.size();)
                results[i] = guarded([&] { return classify_one({lines[i], params}, g); });
        });
    for (auto& t : pool)
        t.join();

    int code = 0;
    json arr = json::array();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        code = std::max(code, results[i].code);
        if (g.json()) {
            json j = results[i].j;
            j["line"] = lines[i];
            arr.push_back(std::move(j));
        } else {
            std::cout << "# " << lines[i] << "\n" << results[i].text << "\n";
        }
    }
    if (g.json())
        std::cout << arr.dump(2) << "\n";
    return code;
}

AffineMap<Rat> named_map(const std::string& name)
{
    if (name == "fold")
        return AffineMap<Rat>::fold();
    if (name == "flip")
        return AffineMap<Rat>::flip();
    if (name == "reflect")
        return AffineMap<Rat>::reflect();
    if (name == "swap")
        return AffineMap<Rat>::swap();
    throw UsageError("unknown map '" + name + "' (fold, flip, reflect, swap)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Affine classification of real plane cubics with exact certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--eps", g.eps_text, "Interval refinement target, a positive rational (default 2^-64)");
    app.add_option("--seed", g.seed, "Seed for random probes");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    int code = 0;
    auto parse_globals = [&] {
        if (!g.eps_text.empty()) {
            g.eps = Rat::parse(g.eps_text);
            if (g.eps.sign() <= 0)
                throw UsageError("--eps must be positive");
        }
    };

    // parse
    std::string parse_text;
    auto* parse = app.add_subcommand("parse", "Echo the normalized polynomial");
    parse->add_option("curve", parse_text, "Polynomial, e.g. \"x^3 + x^2*y = 1\"")->required();
    parse->callback([&] {
        code = emit(guarded([&] {
                        Outcome o;
                        auto c = parse_poly(parse_text);
                        o.j = {{"curve", format_poly(c)}, {"coefficients", curve_to_json(c)}};
                        if (auto r = try_as_reduced(c))
                            o.j["normal_form"] = params_to_json(*r);
                        o.text = format_poly(c) + "\n";
                        return o;
                    }),
                    g);
    });

    // reduce
    std::string reduce_text;
    auto* red = app.add_subcommand("reduce", "Bring a cubic to the normal form x^3 + x^2 y = ...");
    red->add_option("curve", reduce_text)->required();
    red->callback([&] {
        code = emit(guarded([&] {
                        auto c = parse_poly(reduce_text);
                        ReductionResult res = reduce(c, g.eps);
                        Outcome o;
                        o.code = exit_code(res.certificate);
                        o.j = reduction_to_json(c, res);
                        line(o.text, "curve", format_poly(c));
                        line(o.text, "certificate", describe(res.certificate));
                        if (res.certificate.verified()) {
                            line(o.text, "map", describe(res.witness));
                            line(o.text, "scale", res.scale.str());
                            line(o.text, "normal form", params_text(res.reduced));
                            line(o.text, "reduced", format_poly(res.reduced.curve()));
                        }
                        for (const auto& t : res.trace)
                            line(o.text, "trace", t);
                        return o;
                    }),
                    g);
    });

    // classify
    Input cls_in;
    std::string batch;
    auto* cls = app.add_subcommand("classify", "Full pipeline: reduction, family, witness, isotropy");
    cls->add_option("curve", cls_in.text);
    cls->add_option("--batch", batch, "File with one input per line; '#' starts a comment");
    cls->add_flag("--params", cls_in.params, "Input is A,B,C,D,E,F of the normal form");
    cls->callback([&] {
        if (batch.empty() == cls_in.text.empty())
            throw UsageError("classify needs exactly one of CURVE or --batch FILE");
        if (!batch.empty())
            code = run_batch(read_batch(batch), cls_in.params, g);
        else
            code = emit(guarded([&] { return classify_one(cls_in, g); }), g);
    });

    // invariants
    Input inv_in;
    auto* inv = app.add_subcommand("invariants", "Delta1..3, den and the invariant pair");
    inv->add_option("curve", inv_in.text)->required();
    inv->add_flag("--params", inv_in.params, "Input is A,B,C,D,E,F");
    inv->callback([&] {
        code = emit(guarded([&] {
                        auto red = to_reduced(inv_in, g);
                        if (auto* o = std::get_if<Outcome>(&red))
                            return *o;
                        const Reduced& r = std::get<Reduced>(red);
                        DeltaTriple d = deltas(r.reduced);
                        Rat den = invariant_base(r.reduced);
                        InvariantPair p = invariant_pair(r.reduced);
                        Outcome o;
                        o.j = {{"normal_form", params_to_json(r.reduced)},
                               {"Delta1", d.d1.str()},
                               {"Delta2", d.d2.str()},
                               {"Delta3", d.d3.str()},
                               {"den", den.str()},
                               {"I1", p.defined ? json(p.i1.str()) : json(nullptr)},
                               {"I2", p.defined ? json(p.i2.str()) : json(nullptr)}};
                        reduction_text(o.text, r);
                        line(o.text, "Delta1", d.d1.str());
                        line(o.text, "Delta2", d.d2.str());
                        line(o.text, "Delta3", d.d3.str());
                        line(o.text, "den", den.str());
                        line(o.text, "I1", p.defined ? p.i1.str() : "undefined (den = 0)");
                        line(o.text, "I2", p.defined ? p.i2.str() : "undefined (den = 0)");
                        return o;
                    }),
                    g);
    });

    // equiv
    Input eq_a, eq_b;
    bool eq_params = false;
    auto* eq = app.add_subcommand("equiv", "Decide affine equivalence of two cubics");
    eq->add_option("a", eq_a.text)->required();
    eq->add_option("b", eq_b.text)->required();
    eq->add_flag("--params", eq_params, "Inputs are A,B,C,D,E,F");
    eq->callback([&] {
        eq_a.params = eq_b.params = eq_params;
        code = emit(guarded([&] {
                        auto ra = to_reduced(eq_a, g), rb = to_reduced(eq_b, g);
                        for (auto* v : {&ra, &rb})
                            if (auto* o = std::get_if<Outcome>(v))
                                return *o;
                        Verdict v = equivalent(std::get<Reduced>(ra).reduced, std::get<Reduced>(rb).reduced, g.eps);
                        Outcome o;
                        o.code = v.kind == Verdict::Kind::Unresolved ? 2 : 0;
                        o.j = verdict_to_json(v);
                        line(o.text, "verdict", verdict_name(v.kind));
                        if (!v.datum.empty())
                            line(o.text, v.kind == Verdict::Kind::Unresolved ? "diagnostic" : "datum", v.datum);
                        if (v.kind == Verdict::Kind::Equivalent) {
                            line(o.text, "witness", describe(v.witness));
                            line(o.text, "certificate", describe(v.certificate));
                        }
                        return o;
                    }),
                    g);
    });

    // act
    std::string act_curve, act_s, act_map, act_named;
    int act_flow = 0;
    auto* act = app.add_subcommand("act", "Pull a cubic back along a flow or an affine map");
    act->add_option("curve", act_curve)->required();
    auto* o_flow = act->add_option("--flow", act_flow, "Flow index 1..4")->check(CLI::Range(1, 4));
    act->add_option("--s", act_s, "Flow parameter (positive for flows 3, 4)")->needs(o_flow);
    auto* o_map = act->add_option("--map", act_map, "a11,a12,a21,a22,alpha,beta");
    auto* o_named = act->add_option("--named", act_named, "fold, flip, reflect or swap");
    o_flow->excludes(o_map)->excludes(o_named);
    o_map->excludes(o_named);
    act->callback([&] {
        AffineMap<Rat> m;
        if (act_flow) {
            if (act_s.empty())
                throw UsageError("--flow needs --s");
            m = flow_map(act_flow, Rat::parse(act_s));
        } else if (!act_map.empty()) {
            auto v = rational_list(act_map, 6, "--map");
            m = AffineMap<Rat>::make(v[0], v[1], v[2], v[3], v[4], v[5]);
        } else if (!act_named.empty()) {
            m = named_map(act_named);
        } else {
            throw UsageError("act needs --flow/--s, --map or --named");
        }
        require_invertible(m);
        code = emit(guarded([&] {
                        auto c = parse_poly(act_curve);
                        auto out = pullback(m, c);
                        Outcome o;
                        o.j = {{"map", describe(m)}, {"curve", format_poly(out)}, {"coefficients", curve_to_json(out)}};
                        line(o.text, "map", describe(m));
                        line(o.text, "curve", format_poly(out));
                        if (auto r = try_as_reduced(out)) {
                            o.j["normal_form"] = params_to_json(*r);
                            line(o.text, "normal form", params_text(*r));
                        }
                        return o;
                    }),
                    g);
    });

    // ode-check
    std::string ode_curve, ode_x, ode_y;
    int ode_random = 0;
    auto* ode = app.add_subcommand("ode-check", "Evaluate the sixth-order jet relation on cubic jets");
    ode->add_option("curve", ode_curve, "Curve in normal-form shape");
    ode->add_option("--x", ode_x, "Base point x");
    ode->add_option("--y", ode_y, "Base point y");
    ode->add_option("--random", ode_random, "Number of random probes")->check(CLI::PositiveNumber);
    ode->callback([&] {
        auto show = [&](const Jet6& jet, std::string& text, json& arr) {
            Rat p = ode_residual(jet), d = derived_ode_residual(jet);
            text += "residual=" + p.str() + " derived_residual=" + d.str() + "\n";
            arr.push_back({{"residual", p.str()}, {"derived_residual", d.str()}});
            return d.is_zero();
        };
        code = emit(guarded([&] {
                        Outcome o;
                        json arr = json::array();
                        bool ok = true;
                        if (ode_random > 0) {
                            if (!ode_curve.empty())
                                throw UsageError("--random takes no curve");
                            RatSampler rng(g.seed);
                            for (int i = 0; i < ode_random; ++i) {
                                for (;;) {
                                    ReducedCubic<Rat> r = rng.reduced();
                                    Rat x0 = rng.uniform(-9, 9), y0 = rng.uniform(-9, 9);
                                    try {
                                        ok = show(implicit_jet(r, x0, y0), o.text, arr) && ok;
                                        break;
                                    } catch (const Error&) {
                                        continue; // vertical tangent: draw again
                                    }
                                }
                            }
                        } else {
                            if (ode_curve.empty() || ode_x.empty() || ode_y.empty())
                                throw UsageError("ode-check needs CURVE --x X --y Y, or --random N");
                            auto c = parse_poly(ode_curve);
                            if (!reduced_shape(c))
                                throw Error("ode-check needs a curve of the form x^3 + x^2*y = ...");
                            ok = show(implicit_jet_of(plane_poly(c), Rat::parse(ode_x), Rat::parse(ode_y)), o.text,
                                      arr);
                        }
                        o.code = ok ? 0 : 2;
                        o.j = arr;
                        return o;
                    }),
                    g);
    });

    // isotropy
    Input iso_in;
    auto* iso = app.add_subcommand("isotropy", "Stabilizer of the canonical representative");
    iso->add_option("curve", iso_in.text)->required();
    iso->add_flag("--params", iso_in.params, "Input is A,B,C,D,E,F");
    iso->callback([&] {
        code = emit(guarded([&] {
                        auto red = to_reduced(iso_in, g);
                        if (auto* o = std::get_if<Outcome>(&red))
                            return *o;
                        ClassificationReport rep = canonicalize(std::get<Reduced>(red).reduced, g.eps);
                        IsotropyDescription d = isotropy(rep);
                        Outcome o;
                        o.j = {{"family", rep.family.name()},
                               {"parameters", report_to_json(rep)["parameters"]},
                               {"isotropy", isotropy_to_json(d)}};
                        line(o.text, "family", rep.family.name());
                        isotropy_text(o.text, d);
                        return o;
                    }),
                    g);
    });

    // selftest
    auto* self = app.add_subcommand("selftest", "Run the acceptance corpus");
    self->callback([&] {
        auto results = run_acceptance(g.seed);
        json arr = json::array();
        std::string text;
        int failed = 0;
        for (const auto& r : results) {
            failed += !r.pass;
            text += format_result(r, false) + "\n";
            arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        text += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " criteria pass\n";
        code = emit({failed ? 2 : 0, arr, text}, g);
    });

    app.parse_complete_callback(parse_globals);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
