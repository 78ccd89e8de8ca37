#include "onebridge/homology.hpp"

#include "onebridge/error.hpp"

#include <numeric>

namespace onebridge {

std::int64_t abelian_image(const GroupWord& w, std::int64_t beta_power)
{
    const ExponentVector ev = exponent_vector(w);
    return ev.at(0) + beta_power * ev.at(1);
}

AbelianizationReport abelianize(const KnotGroupPresentation& pres)
{
    if (pres.relator.alphabet()->size() != 2)
        throw InvalidParameters("abelianization needs a two-generator presentation");
    AbelianizationReport r;
    const ExponentVector ev = exponent_vector(pres.relator);
    r.e_alpha = ev[0];
    r.e_beta = ev[1];
    r.h1_is_Z = std::gcd(r.e_alpha, r.e_beta) == 1;
    r.v = pres.claimed_framing;
    if (r.e_beta == 1 || r.e_beta == -1) {
        r.beta_power = -r.e_alpha * r.e_beta;
        r.v_star = abelian_image(pres.surface_framing, *r.beta_power);
        r.discrepancy = *r.v_star - r.v;
    }
    return r;
}

FramingAudit audit_framing(const KnotGroupPresentation& pres)
{
    const AbelianizationReport r = abelianize(pres);
    if (!r.h1_is_Z)
        throw InvalidParameters("H1 of the presentation is not Z");
    if (!r.beta_power)
        throw InvalidParameters("b is not a power of the meridian in H1");
    return {r.v, *r.v_star, *r.discrepancy};
}

} // namespace onebridge
