#pragma once

#include "cubaff/classify.hpp"
#include "cubaff/parser.hpp"

#include <json.hpp>

#include <string>

namespace cubaff {

using nlohmann::json;

// Exact values serialize as "p/q" strings, intervals as ["lo", "hi"].

inline json interval_to_json(const RatInterval& v)
{
    if (v.is_point())
        return v.lo().str();
    return json::array({v.lo().str(), v.hi().str()});
}

inline RatInterval interval_from_json(const json& j)
{
    if (j.is_string())
        return RatInterval(Rat::parse(j.get<std::string>()));
    if (j.is_array() && j.size() == 2)
        return RatInterval(Rat::parse(j[0].get<std::string>()), Rat::parse(j[1].get<std::string>()));
    throw Error("expected a rational string or a [lo, hi] pair");
}

template <class T>
json params_to_json(const ReducedCubic<T>& r)
{
    json j = json::object();
    for (int k = 0; k < 6; ++k)
        j[kParamNames[k]] = interval_to_json(RatInterval(r[k]));
    return j;
}

inline ReducedCubic<RatInterval> params_from_json(const json& j)
{
    ReducedCubic<RatInterval> r;
    for (int k = 0; k < 6; ++k)
        r[k] = interval_from_json(j.at(kParamNames[k]));
    return r;
}

inline json certificate_to_json(const Certificate& c)
{
    json j{{"status", status_name(c.status)}};
    if (c.status == Certificate::Status::IntervalVerified)
        j["bound"] = c.bound.str();
    if (!c.diagnostic.empty())
        j["diagnostic"] = c.diagnostic;
    return j;
}

inline Certificate certificate_from_json(const json& j)
{
    Certificate c;
    c.status = status_from_name(j.at("status").get<std::string>());
    c.bound = j.contains("bound") ? Rat::parse(j["bound"].get<std::string>()) : Rat(0);
    c.diagnostic = j.value("diagnostic", std::string());
    return c;
}

inline json witness_to_json(const std::vector<WitnessStep>& w)
{
    json arr = json::array();
    for (const auto& st : w) {
        if (st.kind == WitnessStep::Kind::Flow)
            arr.push_back({{"flow", st.flow}, {"s", interval_to_json(st.s)}});
        else
            arr.push_back({{"map", st.map_name()}});
    }
    return arr;
}

inline std::vector<WitnessStep> witness_from_json(const json& arr)
{
    std::vector<WitnessStep> w;
    for (const auto& j : arr) {
        if (j.contains("flow")) {
            w.push_back(WitnessStep::flow_step(j["flow"].get<int>(), interval_from_json(j.at("s"))));
            continue;
        }
        std::string m = j.at("map").get<std::string>();
        if (m == "fold")
            w.push_back(WitnessStep::fold());
        else if (m == "flip")
            w.push_back(WitnessStep::flip());
        else if (m == "reflect")
            w.push_back(WitnessStep::reflect());
        else
            throw Error("unknown witness map '" + m + "'");
    }
    return w;
}

inline json signature_to_json(const Signature& s)
{
    json j{{"sign_C", s.c},   {"sign_Delta1", s.d1}, {"sign_Delta2", s.d2},
           {"sign_Delta3", s.d3}, {"sign_den", s.den},  {"invariants_defined", s.pair.defined}};
    if (s.pair.defined) {
        j["I1"] = s.pair.i1.str();
        j["I2"] = s.pair.i2.str();
    }
    return j;
}

inline Signature signature_from_json(const json& j)
{
    Signature s;
    s.c = j.at("sign_C").get<int>();
    s.d1 = j.at("sign_Delta1").get<int>();
    s.d2 = j.at("sign_Delta2").get<int>();
    s.d3 = j.at("sign_Delta3").get<int>();
    s.den = j.at("sign_den").get<int>();
    s.pair.defined = j.at("invariants_defined").get<bool>();
    if (s.pair.defined) {
        s.pair.i1 = Rat::parse(j.at("I1").get<std::string>());
        s.pair.i2 = Rat::parse(j.at("I2").get<std::string>());
    }
    return s;
}

inline json isotropy_to_json(const std::optional<IsotropyDescription>& iso)
{
    if (!iso)
        return nullptr;
    return {{"kind", isotropy_kind_name(iso->kind)},
            {"form", iso->form},
            {"checked", iso->checked},
            {"extras", iso->extras}};
}

inline std::optional<IsotropyDescription> isotropy_from_json(const json& j)
{
    if (j.is_null())
        return std::nullopt;
    IsotropyDescription d;
    std::string k = j.at("kind").get<std::string>();
    bool found = false;
    for (auto kind : {IsotropyDescription::Kind::Trivial, IsotropyDescription::Kind::Z2,
                      IsotropyDescription::Kind::OneParam, IsotropyDescription::Kind::TwoParam})
        if (k == isotropy_kind_name(kind)) {
            d.kind = kind;
            found = true;
        }
    if (!found)
        throw Error("unknown isotropy kind '" + k + "'");
    d.form = j.at("form").get<std::string>();
    d.checked = j.at("checked").get<std::vector<std::string>>();
    d.extras = j.at("extras").get<std::vector<std::string>>();
    return d;
}

/// Report as JSON: {family, stratum, parameters, signature, witness,
/// certificate, isotropy, extensions, ...}.
inline json report_to_json(const ClassificationReport& r)
{
    json params = json::array();
    for (const auto& p : r.parameters)
        params.push_back({{"name", p.name}, {"value", interval_to_json(p.value)}});
    json j{{"family", r.family.name()},
           {"label", r.family.label()},
           {"stratum", r.family.stratum()},
           {"parameters", params},
           {"signature", signature_to_json(r.signature)},
           {"witness", witness_to_json(r.witness)},
           {"certificate", certificate_to_json(r.certificate)},
           {"replay", certificate_to_json(r.replay)},
           {"isotropy", isotropy_to_json(r.isotropy)},
           {"extensions", r.extensions},
           {"notes", r.notes},
           {"input", params_to_json(r.input)},
           {"representative", params_to_json(r.representative)}};
    return j;
}

inline ClassificationReport report_from_json(const json& j)
{
    ClassificationReport r;
    r.family = FamilyTag::from_label(j.at("label").get<std::string>());
    if (r.family.name() != j.at("family").get<std::string>())
        throw Error("family and label disagree");
    for (const auto& p : j.at("parameters"))
        r.parameters.push_back({p.at("name").get<std::string>(), interval_from_json(p.at("value"))});
    r.signature = signature_from_json(j.at("signature"));
    r.witness = witness_from_json(j.at("witness"));
    r.certificate = certificate_from_json(j.at("certificate"));
    r.replay = certificate_from_json(j.at("replay"));
    r.isotropy = isotropy_from_json(j.at("isotropy"));
    r.extensions = j.at("extensions").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    auto in = params_from_json(j.at("input"));
    for (int k = 0; k < 6; ++k) {
        if (!in[k].is_point())
            throw Error("input parameters must be exact");
        r.input[k] = in[k].lo();
    }
    r.representative = params_from_json(j.at("representative"));
    return r;
}

/// Reduction outcome as JSON.
inline json reduction_to_json(const CubicCurve<Rat>& input, const ReductionResult& res)
{
    json j{{"input", curve_to_json(input)},
           {"certificate", certificate_to_json(res.certificate)},
           {"trace", res.trace}};
    if (res.certificate.verified()) {
        j["reduced"] = params_to_json(res.reduced);
        j["scale"] = res.scale.str();
        j["witness"] = describe(res.witness);
    }
    return j;
}

inline json verdict_to_json(const Verdict& v)
{
    json j{{"verdict", verdict_name(v.kind)}, {"datum", v.datum}};
    if (v.kind == Verdict::Kind::Equivalent) {
        j["witness"] = witness_to_json(v.witness);
        j["certificate"] = certificate_to_json(v.certificate);
    }
    return j;
}

} // namespace cubaff
