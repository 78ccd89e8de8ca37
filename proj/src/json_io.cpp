#include "onebridge/json_io.hpp"

#include "onebridge/error.hpp"
#include "detail.hpp"

namespace onebridge {

using detail::Overloaded;

namespace {

template <class T>
Json optional_json(const std::optional<T>& v)
{
    if (!v)
        return nullptr;
    if constexpr (std::is_arithmetic_v<T>)
        return *v;
    else
        return to_json(*v);
}

template <class T>
std::optional<T> optional_int(const Json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

/// Runs a reader, turning library exceptions into InvalidParameters.
template <class F>
auto guarded(const char* what, F&& fn)
{
    try {
        return fn();
    } catch (const InvalidParameters&) {
        throw;
    } catch (const std::exception& e) {
        throw InvalidParameters(std::string("malformed ") + what + ": " + e.what());
    }
}

} // namespace

Json to_json(const GroupWord& w) { return to_string(w); }

Json to_json(const FamilyParams& f)
{
    return std::visit(Overloaded{
                          [](const Family1& v) { return Json{{"family", 1}, {"w", v.w}, {"k", v.k}, {"m", v.m}}; },
                          [](const Family2& v) { return Json{{"family", 2}, {"n", v.n}, {"k", v.k}, {"m", v.m}}; },
                          [](const Family3& v) { return Json{{"family", 3}, {"n", v.n}, {"k", v.k}, {"m", v.m}}; },
                      },
                      f);
}

Json to_json(const OneBridgeParams& p) { return Json{{"w", p.w}, {"t", p.t}, {"b", p.b}, {"m", p.m}}; }

Json to_json(const KnotGroupPresentation& p)
{
    Json j{{"generators", Json::array({"a", "b"})},
           {"relation_lhs", to_json(p.relation_lhs)},
           {"relation_rhs", to_json(p.relation_rhs)},
           {"relator", to_json(p.relator)},
           {"meridian", to_json(p.meridian)},
           {"surface_framing", to_json(p.surface_framing)},
           {"surface_framing_alternate", optional_json(p.surface_framing_alternate)},
           {"claimed_framing", p.claimed_framing},
           {"family", optional_json(p.family)}};
    return j;
}

Json to_json(const AbelianizationReport& r)
{
    return Json{{"e_alpha", r.e_alpha},
                {"e_beta", r.e_beta},
                {"h1_is_Z", r.h1_is_Z},
                {"beta_power", optional_json(r.beta_power)},
                {"v_star", optional_json(r.v_star)},
                {"v", r.v},
                {"discrepancy", optional_json(r.discrepancy)}};
}

Json to_json(const LaurentPoly& p)
{
    return Json{{"coefficients", p.coeffs()}, {"offset", p.is_zero() ? 0 : p.low_degree()}, {"text", to_string(p)}};
}

Json to_json(const IneqFact& f)
{
    return Json{{"lhs", to_json(f.lhs)}, {"relation", to_string(f.relation)}, {"rhs", to_json(f.rhs)}};
}

Json to_json(const Certificate& c)
{
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json j{{"rule", to_string(s.rule)}, {"inputs", s.inputs}};
        if (s.rule == Rule::DeleteAlpha || s.rule == Rule::InsertAlphaInverse) {
            j["side"] = s.side == Side::Lhs ? "lhs" : "rhs";
            j["position"] = s.position;
        }
        if (s.rule == Rule::PrependWord || s.rule == Rule::AppendWord)
            j["word"] = to_json(s.word);
        j["result"] = to_json(s.result);
        steps.push_back(std::move(j));
    }
    return Json{{"format", "onebridge-certificate"},
                {"version", kCertificateFormatVersion},
                {"generators", Json::array({"a", "b"})},
                {"steps", std::move(steps)},
                {"conclusion", to_json(c.conclusion)}};
}

Json to_json(const VerificationResult& v)
{
    return Json{{"ok", v.ok}, {"failed_step", optional_json(v.failed_step)}, {"reason", v.reason}};
}

Json to_json(const CriterionReport& c)
{
    return Json{{"meridian_is_generator", c.meridian_is_generator},
                {"s_positive", c.s_positive},
                {"s_has_alpha", c.s_has_alpha},
                {"v_claimed_positive", c.v_claimed_positive},
                {"v_audited_positive", optional_json(c.v_audited_positive)},
                {"pass", c.pass()}};
}

Json to_json(const Rational& q) { return Json{{"numerator", q.numerator()}, {"denominator", q.denominator()}}; }

Json to_json(const SlopeBound& b)
{
    return Json{{"family", optional_json(b.family)},
                {"policy", to_string(b.policy)},
                {"criterion_bound", to_json(b.criterion_bound)},
                {"lspace_bound", to_json(b.lspace_bound)},
                {"theorem_bound", optional_json(b.theorem_bound)}};
}

Json to_json(const RewriteStep& s)
{
    return Json{{"position", s.position},
                {"direction", s.direction == RelatorDirection::Forward ? "forward" : "backward"},
                {"conjugator", to_json(s.conjugator)}};
}

Json to_json(const FramingSimplification& s)
{
    Json steps = Json::array();
    for (const auto& st : s.steps)
        steps.push_back(to_json(st));
    return Json{{"unsimplified", to_json(s.unsimplified)}, {"steps", std::move(steps)}, {"result", to_json(s.result)}};
}

Json to_json(const SweepRecord& r)
{
    const char* status = !r.failures.empty() ? "failure" : !r.findings.empty() ? "finding" : "pass";
    return Json{{"family", to_json(r.family)},
                {"params", to_json(r.params)},
                {"is_knot", r.is_knot},
                {"permutation", r.permutation},
                {"closed_form_match", r.closed_form_match},
                {"relator", r.relator},
                {"relator_rederived", r.relator_rederived},
                {"framing_simplified", r.framing_simplified},
                {"audit", to_json(r.audit)},
                {"alexander",
                 {{"fox", optional_json(r.fox)}, {"burau", optional_json(r.burau)}, {"match", optional_json(r.alexander_match)}}},
                {"certificate", {{"ok", r.certificate_ok}, {"steps", r.certificate_steps}}},
                {"criterion", to_json(r.criterion)},
                {"bound", optional_json(r.bound)},
                {"genus", r.genus},
                {"theorem_bound", r.theorem_bound},
                {"findings", r.findings},
                {"failures", r.failures},
                {"status", status}};
}

GroupWord word_from_json(const Json& j, const AlphabetPtr& alphabet)
{
    return guarded("word", [&] { return parse_word(alphabet, j.get<std::string>()); });
}

FamilyParams family_from_json(const Json& j)
{
    return guarded("family", [&] {
        FamilyParams f;
        switch (j.at("family").get<int>()) {
        case 1: f = Family1{j.at("w").get<int>(), j.at("k").get<int>(), j.at("m").get<int>()}; break;
        case 2: f = Family2{j.at("n").get<int>(), j.at("k").get<int>(), j.at("m").get<int>()}; break;
        case 3: f = Family3{j.at("n").get<int>(), j.at("k").get<int>(), j.at("m").get<int>()}; break;
        default: throw InvalidParameters("family must be 1, 2 or 3");
        }
        validate(f);
        return f;
    });
}

OneBridgeParams params_from_json(const Json& j)
{
    return guarded("parameters", [&] {
        OneBridgeParams p{j.at("w").get<int>(), j.at("t").get<int>(), j.at("b").get<int>(), j.at("m").get<int>()};
        p.validate();
        return p;
    });
}

AbelianizationReport audit_from_json(const Json& j)
{
    return guarded("audit", [&] {
        AbelianizationReport r;
        r.e_alpha = j.at("e_alpha").get<std::int64_t>();
        r.e_beta = j.at("e_beta").get<std::int64_t>();
        r.h1_is_Z = j.at("h1_is_Z").get<bool>();
        r.beta_power = optional_int<std::int64_t>(j, "beta_power");
        r.v_star = optional_int<std::int64_t>(j, "v_star");
        r.v = j.at("v").get<std::int64_t>();
        r.discrepancy = optional_int<std::int64_t>(j, "discrepancy");
        return r;
    });
}

LaurentPoly poly_from_json(const Json& j)
{
    return guarded("polynomial", [&] {
        return LaurentPoly(j.at("coefficients").get<std::vector<std::int64_t>>(), j.at("offset").get<std::int64_t>());
    });
}

IneqFact fact_from_json(const Json& j)
{
    return guarded("fact", [&] {
        const auto rel = parse_relation(j.at("relation").get<std::string>());
        if (!rel)
            throw InvalidParameters("unknown relation");
        return IneqFact{word_from_json(j.at("lhs")), *rel, word_from_json(j.at("rhs"))};
    });
}

Certificate certificate_from_json(const Json& j)
{
    return guarded("certificate", [&] {
        if (j.at("format").get<std::string>() != "onebridge-certificate")
            throw InvalidParameters("not a certificate");
        if (j.at("version").get<int>() != kCertificateFormatVersion)
            throw InvalidParameters("unsupported certificate version");
        Certificate c;
        for (const auto& s : j.at("steps")) {
            DerivationStep st;
            const auto rule = parse_rule(s.at("rule").get<std::string>());
            if (!rule)
                throw InvalidParameters("unknown rule");
            st.rule = *rule;
            st.inputs = s.at("inputs").get<std::vector<std::size_t>>();
            if (s.contains("side")) {
                const auto side = s.at("side").get<std::string>();
                if (side != "lhs" && side != "rhs")
                    throw InvalidParameters("side must be lhs or rhs");
                st.side = side == "lhs" ? Side::Lhs : Side::Rhs;
            }
            st.position = s.value("position", std::size_t{0});
            if (s.contains("word"))
                st.word = word_from_json(s.at("word"));
            st.result = fact_from_json(s.at("result"));
            c.steps.push_back(std::move(st));
        }
        c.conclusion = fact_from_json(j.at("conclusion"));
        return c;
    });
}

CriterionReport criterion_from_json(const Json& j)
{
    return guarded("criterion", [&] {
        CriterionReport c;
        c.meridian_is_generator = j.at("meridian_is_generator").get<bool>();
        c.s_positive = j.at("s_positive").get<bool>();
        c.s_has_alpha = j.at("s_has_alpha").get<bool>();
        c.v_claimed_positive = j.at("v_claimed_positive").get<bool>();
        c.v_audited_positive = optional_int<bool>(j, "v_audited_positive");
        return c;
    });
}

Rational rational_from_json(const Json& j)
{
    return guarded("rational", [&] {
        return Rational(j.at("numerator").get<std::int64_t>(), j.at("denominator").get<std::int64_t>());
    });
}

SlopeBound bound_from_json(const Json& j)
{
    return guarded("bound", [&] {
        SlopeBound b;
        if (!j.at("family").is_null())
            b.family = family_from_json(j.at("family"));
        const auto policy = parse_policy(j.at("policy").get<std::string>());
        if (!policy)
            throw InvalidParameters("unknown policy");
        b.policy = *policy;
        b.criterion_bound = rational_from_json(j.at("criterion_bound"));
        b.lspace_bound = rational_from_json(j.at("lspace_bound"));
        b.theorem_bound = optional_int<std::int64_t>(j, "theorem_bound");
        return b;
    });
}

SweepRecord record_from_json(const Json& j)
{
    return guarded("sweep record", [&] {
        SweepRecord r{family_from_json(j.at("family")), params_from_json(j.at("params"))};
        r.is_knot = j.at("is_knot").get<bool>();
        r.permutation = j.at("permutation").get<std::string>();
        r.closed_form_match = j.at("closed_form_match").get<bool>();
        r.relator = j.at("relator").get<std::string>();
        r.relator_rederived = j.at("relator_rederived").get<bool>();
        r.framing_simplified = j.at("framing_simplified").get<bool>();
        r.audit = audit_from_json(j.at("audit"));
        const Json& alex = j.at("alexander");
        if (!alex.at("fox").is_null())
            r.fox = poly_from_json(alex.at("fox"));
        if (!alex.at("burau").is_null())
            r.burau = poly_from_json(alex.at("burau"));
        r.alexander_match = optional_int<bool>(alex, "match");
        r.certificate_ok = j.at("certificate").at("ok").get<bool>();
        r.certificate_steps = j.at("certificate").at("steps").get<std::size_t>();
        r.criterion = criterion_from_json(j.at("criterion"));
        if (!j.at("bound").is_null())
            r.bound = bound_from_json(j.at("bound"));
        r.genus = j.at("genus").get<std::int64_t>();
        r.theorem_bound = j.at("theorem_bound").get<std::int64_t>();
        r.findings = j.at("findings").get<std::vector<std::string>>();
        r.failures = j.at("failures").get<std::vector<std::string>>();
        return r;
    });
}

} // namespace onebridge
