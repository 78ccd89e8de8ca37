#pragma once

#include "onebridge/presentation.hpp"

#include <cstdint>
#include <optional>

namespace onebridge {

/// H1 of <a, b | r>: Z^2 modulo the exponent vector (e_alpha, e_beta) of r.
struct AbelianizationReport {
    std::int64_t e_alpha = 0;
    std::int64_t e_beta = 0;
    /// gcd(|e_alpha|, |e_beta|) == 1.
    bool h1_is_Z = false;
    /// e with b == a^e in H1; set when |e_beta| == 1.
    std::optional<std::int64_t> beta_power;
    /// Image of s under a -> 1, b -> e; set with beta_power.
    std::optional<std::int64_t> v_star;
    std::int64_t v = 0;
    /// v_star - v.
    std::optional<std::int64_t> discrepancy;
};

AbelianizationReport abelianize(const KnotGroupPresentation& pres);

/// Exponent of w in H1 = Z under a -> 1, b -> beta_power.
std::int64_t abelian_image(const GroupWord& w, std::int64_t beta_power);

struct FramingAudit {
    std::int64_t v = 0;
    std::int64_t v_star = 0;
    std::int64_t discrepancy = 0;
};

/// Throws InvalidParameters unless H1 = Z with |e_beta| == 1.
FramingAudit audit_framing(const KnotGroupPresentation& pres);

} // namespace onebridge
