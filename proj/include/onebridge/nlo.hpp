#pragma once

#include "onebridge/braid.hpp"
#include "onebridge/presentation.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace onebridge {

enum class Relation { Greater, GreaterEqual, Equal };

/// lhs t REL rhs t for every point t of an ordered line on which every
/// generator acts order-preservingly and a acts strictly increasingly.
/// Words act right to left.
struct IneqFact {
    GroupWord lhs{alphabet_ab()};
    Relation relation = Relation::Equal;
    GroupWord rhs{alphabet_ab()};
};

bool operator==(const IneqFact& x, const IneqFact& y);

enum class Rule {
    Hypothesis,         ///< a > 1
    RelatorEquality,    ///< u = v when u v^-1 cyclically reduces to a rotation of r or r^-1
    DeleteAlpha,        ///< drop an `a` from the rhs or an `A` from the lhs; result is strict
    InsertAlphaInverse, ///< add an `A` to the rhs or an `a` to the lhs; result is strict
    Compose,            ///< x REL y, z REL' w  =>  x z REL'' y w
    PrependWord,        ///< x REL y  =>  w x REL w y
    AppendWord,         ///< x REL y  =>  x w REL y w
    FreeReduce,         ///< replace both sides by freely equal words
    Weaken,             ///< > or =  =>  >=
};

enum class Side { Lhs, Rhs };

/// One rule application. `result` is the fact the step claims; the
/// verifier recomputes it from the inputs and parameters.
struct DerivationStep {
    Rule rule = Rule::Hypothesis;
    std::vector<std::size_t> inputs;
    Side side = Side::Rhs;
    std::size_t position = 0;
    /// Prepended or appended word (PrependWord, AppendWord).
    GroupWord word{alphabet_ab()};
    IneqFact result;
};

struct Certificate {
    std::vector<DerivationStep> steps;
    IneqFact conclusion;
};

struct VerificationResult {
    bool ok = false;
    /// Index of the first rejected step (steps.size() for the conclusion).
    std::optional<std::size_t> failed_step;
    std::string reason;
};

struct CriterionReport {
    bool meridian_is_generator = false;
    bool s_positive = false;
    bool s_has_alpha = false;
    bool v_claimed_positive = false;
    /// Unset when H1 does not give an audited framing.
    std::optional<bool> v_audited_positive;
    bool pass() const
    {
        return meridian_is_generator && s_positive && s_has_alpha && v_claimed_positive && v_audited_positive.value_or(false);
    }
};

CriterionReport criterion_check(const KnotGroupPresentation& pres);

/// Scripted certificate for family presentations; bounded search otherwise.
/// Throws DerivationError when no certificate is found.
Certificate derive_beta_monotone(const KnotGroupPresentation& pres);

struct SearchLimits {
    std::size_t max_depth = 6;
    std::size_t max_states = 200000;
};

/// Breadth-first search over a-deletions and A-insertions applied to the
/// relator; deterministic (rule, then position). Throws DerivationError
/// when the limits are exhausted.
Certificate search_beta_monotone(const KnotGroupPresentation& pres, const SearchLimits& limits = {});

VerificationResult verify_certificate(const Certificate& cert, const KnotGroupPresentation& pres);

/// Genus of the closure of a positive knot braid: (exponent sum - strands + 1) / 2.
std::int64_t genus_positive_braid(const OneBridgeParams& p);

enum class FramingPolicy { Claimed, Audited };

using Rational = boost::rational<std::int64_t>;

struct SlopeBound {
    std::optional<FamilyParams> family;
    FramingPolicy policy = FramingPolicy::Claimed;
    /// Framing v (claimed) or v* (audited).
    Rational criterion_bound;
    /// 2g - 1.
    Rational lspace_bound;
    /// The slope bound stated for the family, reported verbatim.
    std::optional<std::int64_t> theorem_bound;
};

std::int64_t theorem_slope_bound(const FamilyParams& f);

/// Throws DerivationError when the criterion fails under `policy`.
SlopeBound surgery_threshold(const KnotGroupPresentation& pres, const OneBridgeParams& p, FramingPolicy policy);

std::string to_string(Relation r);
std::string to_string(Rule r);
std::string to_string(FramingPolicy p);
std::optional<Relation> parse_relation(std::string_view s);
std::optional<Rule> parse_rule(std::string_view s);
std::optional<FramingPolicy> parse_policy(std::string_view s);

} // namespace onebridge
