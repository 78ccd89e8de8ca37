#include "onebridge/report.hpp"

#include "onebridge/error.hpp"

namespace onebridge {

std::optional<FamilyParams> family_of(const OneBridgeParams& p)
{
    p.validate();
    FamilyParams f;
    if (p.t == 1 && p.b % 2 == 0)
        f = Family1{p.w, p.b / 2, p.m};
    else if (p.w % 2 == 1 && p.t == p.w - 2 && p.b % 2 == 0)
        f = Family2{(p.w - 1) / 2, p.b / 2, p.m};
    else if (p.w % 2 == 0 && p.t == p.w - 2 && p.b % 2 == 1)
        f = Family3{p.w / 2, (p.b + 1) / 2, p.m};
    else
        return std::nullopt;
    try {
        validate(f);
    } catch (const InvalidParameters&) {
        return std::nullopt;
    }
    return f;
}

SweepRecord evaluate(const FamilyParams& f, const SweepOptions& options)
{
    validate(f);
    SweepRecord r{f, to_one_bridge(f)};
    auto guard = [&](const char* what, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            r.failures.push_back(std::string(what) + ": " + e.what());
        }
    };

    const BraidWord word = one_bridge_word(r.params);
    const Permutation perm = induced_permutation(word);
    r.is_knot = perm.is_single_cycle();
    r.permutation = perm.cycle_string();
    guard("closed form", [&] { r.closed_form_match = perm == closed_form_permutation(f); });
    if (!r.is_knot)
        r.failures.push_back("closure is not a knot");
    else if (!r.closed_form_match)
        r.failures.push_back("permutation differs from the closed-form cycle");

    const KnotGroupPresentation pres = presentation_for(f);
    r.relator = to_string(pres.relator);
    guard("relator", [&] { r.relator_rederived = same_relator(derive_relator(svk_relations(f)), pres.relator); });
    if (!r.relator_rederived)
        r.failures.push_back("re-derived relator differs from the displayed one");
    guard("push-off", [&] { r.framing_simplified = framing_simplification(f).result == reduce(pres.surface_framing); });
    if (!r.framing_simplified)
        r.failures.push_back("push-off does not simplify to the displayed s");

    r.audit = abelianize(pres);
    if (!r.audit.h1_is_Z)
        r.failures.push_back("H1 is not Z");
    if (!r.audit.beta_power)
        r.failures.push_back("|e_b| != 1");
    if (r.audit.v_star) {
        if (abelian_image(longitude(pres, *r.audit.v_star), *r.audit.beta_power) != 0)
            r.failures.push_back("longitude with audited framing is not null-homologous");
        if (*r.audit.discrepancy != 0)
            r.findings.push_back("framing discrepancy: v = " + std::to_string(r.audit.v) +
                                 ", v* = " + std::to_string(*r.audit.v_star));
    }

    if (r.audit.beta_power && (options.alexander_max_w == 0 || r.params.w <= options.alexander_max_w)) {
        guard("alexander", [&] {
            r.fox = fox_alexander(pres, r.audit);
            r.burau = burau_alexander(word);
            r.alexander_match = equal_up_to_units(*r.fox, *r.burau);
        });
        if (r.alexander_match == false)
            r.findings.push_back("Fox and Burau Alexander polynomials differ");
    }

    guard("certificate", [&] {
        const Certificate c = derive_beta_monotone(pres);
        r.certificate_steps = c.steps.size();
        const VerificationResult v = verify_certificate(c, pres);
        r.certificate_ok = v.ok;
        if (!v.ok)
            r.failures.push_back("certificate rejected: " + v.reason);
    });

    r.criterion = criterion_check(pres);
    if (!r.criterion.pass())
        r.findings.push_back("criterion hypotheses fail");
    r.theorem_bound = theorem_slope_bound(f);
    guard("genus", [&] { r.genus = genus_positive_braid(r.params); });
    try {
        r.bound = surgery_threshold(pres, r.params, options.policy);
    } catch (const DerivationError& e) {
        r.findings.push_back(e.what());
    } catch (const std::exception& e) {
        r.failures.push_back(std::string("threshold: ") + e.what());
    }
    return r;
}

namespace {

bool same_bound(const std::optional<SlopeBound>& x, const std::optional<SlopeBound>& y)
{
    if (x.has_value() != y.has_value())
        return false;
    if (!x)
        return true;
    return x->family == y->family && x->policy == y->policy && x->criterion_bound == y->criterion_bound &&
           x->lspace_bound == y->lspace_bound && x->theorem_bound == y->theorem_bound;
}

bool same_audit(const AbelianizationReport& x, const AbelianizationReport& y)
{
    return x.e_alpha == y.e_alpha && x.e_beta == y.e_beta && x.h1_is_Z == y.h1_is_Z && x.beta_power == y.beta_power &&
           x.v_star == y.v_star && x.v == y.v && x.discrepancy == y.discrepancy;
}

bool same_criterion(const CriterionReport& x, const CriterionReport& y)
{
    return x.meridian_is_generator == y.meridian_is_generator && x.s_positive == y.s_positive &&
           x.s_has_alpha == y.s_has_alpha && x.v_claimed_positive == y.v_claimed_positive &&
           x.v_audited_positive == y.v_audited_positive;
}

} // namespace

bool operator==(const SweepRecord& x, const SweepRecord& y)
{
    return x.family == y.family && x.params == y.params && x.is_knot == y.is_knot && x.permutation == y.permutation &&
           x.closed_form_match == y.closed_form_match && x.relator == y.relator &&
           x.relator_rederived == y.relator_rederived && x.framing_simplified == y.framing_simplified &&
           same_audit(x.audit, y.audit) && x.fox == y.fox && x.burau == y.burau && x.alexander_match == y.alexander_match &&
           x.certificate_ok == y.certificate_ok && x.certificate_steps == y.certificate_steps &&
           same_criterion(x.criterion, y.criterion) && same_bound(x.bound, y.bound) && x.genus == y.genus &&
           x.theorem_bound == y.theorem_bound && x.findings == y.findings && x.failures == y.failures;
}

} // namespace onebridge
