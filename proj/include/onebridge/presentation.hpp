#pragma once

#include "onebridge/braid.hpp"
#include "onebridge/freeword.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace onebridge {

/// Two-generator one-relator knot group <a, b | lhs = rhs> with its
/// peripheral words. Generators are a (alpha) and b (beta).
struct KnotGroupPresentation {
    GroupWord relation_lhs;
    GroupWord relation_rhs;
    /// cyclic_reduce(rhs * lhs^-1).
    GroupWord relator;
    GroupWord meridian;
    GroupWord surface_framing;
    /// A second stated form of s (family 3 only: a cyclic conjugate).
    std::optional<GroupWord> surface_framing_alternate;
    /// Framing of s as claimed: (w - 1)(t + m w) + b for the families.
    std::int64_t claimed_framing = 0;
    std::optional<FamilyParams> family;
};

/// Builds a presentation from the displayed relation and peripheral words.
KnotGroupPresentation make_presentation(GroupWord lhs, GroupWord rhs, GroupWord meridian, GroupWord surface_framing,
                                        std::int64_t claimed_framing, std::optional<FamilyParams> family = std::nullopt);

KnotGroupPresentation family1_presentation(int w, int k, int m);
KnotGroupPresentation family2_presentation(int n, int k, int m);
KnotGroupPresentation family3_presentation(int n, int k, int m);
KnotGroupPresentation presentation_for(const FamilyParams& f);

/// Families 2 and 3 share the relator [(C1 C2)^(n-k+b) (ab)^(1-b) b^(k-n-1)]^(m+1) (C1 C2)^-1
/// with C1 = a b^(n-k+1), C2 = a b^(k-n).
struct UnifiedPresentation {
    GroupWord c1;
    GroupWord c2;
    GroupWord relator;
    int b = 0;
    int n = 0;
    int k = 0;
    int m = 0;
};
UnifiedPresentation unified_presentation(const FamilyParams& f);

/// One loop of the punctured Heegaard surface: its image in pi1(U) (over
/// a, b) equals its image in pi1(V) (over g, d).
struct LoopRelation {
    GroupWord handlebody_u;
    GroupWord handlebody_v;
};

/// How the elimination of gamma and delta proceeds for one family.
struct EliminationScript {
    /// g^p is isolated as loops[power_from] * loops[power_over]^-1.
    std::size_t power_from = 0;
    std::size_t power_over = 0;
    std::int64_t gamma_power = 0;
    /// g = loops[0] * (g^p)^-c     (sign +1), or
    /// g = (g^p)^c * loops[0]^-1   (sign -1).
    std::int64_t gamma_multiplier = 0;
    int gamma_sign = 1;
    /// d = (g^p)^-e * loops[delta_from]  (delta via the power expression), or
    /// d = g^-e * loops[delta_from]      (delta via the gamma expression).
    std::size_t delta_from = 0;
    bool delta_via_power = true;
    std::int64_t delta_exponent = 0;
};

/// Seifert-van Kampen data: the green, purple and olive loop relations over
/// {a, b, g, d}, the elimination script, and the stated expressions for
/// g^p, g and d in terms of a, b (over {a, b}).
struct SvkData {
    FamilyParams family;
    std::array<LoopRelation, 3> loops;
    EliminationScript script;
    GroupWord power_expression;
    GroupWord gamma_expression;
    GroupWord delta_expression;
    /// The push-off s as a word in g, d: g^(t + m w) d.
    GroupWord framing_gd;
};

SvkData svk_relations(const FamilyParams& f);

/// Result of replaying the elimination.
struct Elimination {
    GroupWord power_expression;
    GroupWord gamma_expression;
    GroupWord delta_expression;
    /// Cyclically reduced, over {a, b}.
    GroupWord relator;
};

/// Replays the elimination; throws DerivationError when a scripted
/// cancellation fails or a derived expression differs from the stated one.
Elimination eliminate(const SvkData& d);
GroupWord derive_relator(const SvkData& d);

enum class RelatorDirection { Forward, Backward };

/// Replaces the relation's lhs at `position` by its rhs (forward) or the rhs
/// by the lhs (backward). Throws InvalidParameters on no match.
GroupWord apply_relator(const GroupWord& w, const KnotGroupPresentation& pres, std::size_t position,
                        RelatorDirection direction);

/// One relator application in general position: inserts c r c^-1 (forward)
/// or c r^-1 c^-1 (backward) at `position`, then reduces.
struct RewriteStep {
    std::size_t position = 0;
    RelatorDirection direction = RelatorDirection::Forward;
    GroupWord conjugator;
};

GroupWord insert_relator(const GroupWord& w, const KnotGroupPresentation& pres, const RewriteStep& step);
GroupWord replay_rewrites(GroupWord w, const KnotGroupPresentation& pres, const std::vector<RewriteStep>& steps);

/// The s-simplification: substitute-expanded s as a word in a, b, the rewrite
/// script, and the word it ends at (the closed-form s when all is well).
struct FramingSimplification {
    GroupWord unsimplified;
    std::vector<RewriteStep> steps;
    GroupWord result;
};
FramingSimplification framing_simplification(const FamilyParams& f);

/// lambda = mu^-framing * s.
GroupWord longitude(const KnotGroupPresentation& pres, std::int64_t framing);

} // namespace onebridge
