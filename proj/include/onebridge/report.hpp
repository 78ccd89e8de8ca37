#pragma once

#include "onebridge/alexander.hpp"
#include "onebridge/homology.hpp"
#include "onebridge/nlo.hpp"

#include <optional>
#include <string>
#include <vector>

namespace onebridge {

/// The family a generic parameter set belongs to, if any.
std::optional<FamilyParams> family_of(const OneBridgeParams& p);

struct SweepOptions {
    FramingPolicy policy = FramingPolicy::Claimed;
    /// Skip the Alexander comparison above this many strands (0: never skip).
    int alexander_max_w = 0;
};

/// Every check for one family parameter set. `failures` are broken
/// invariants; `findings` are reportable mismatches with stated values.
struct SweepRecord {
    FamilyParams family{};
    OneBridgeParams params{};
    bool is_knot = false;
    std::string permutation{};
    bool closed_form_match = false;
    std::string relator{};
    bool relator_rederived = false;
    bool framing_simplified = false;
    AbelianizationReport audit{};
    std::optional<LaurentPoly> fox{};
    std::optional<LaurentPoly> burau{};
    std::optional<bool> alexander_match{};
    bool certificate_ok = false;
    std::size_t certificate_steps = 0;
    CriterionReport criterion{};
    std::optional<SlopeBound> bound{};
    std::int64_t genus = 0;
    std::int64_t theorem_bound = 0;
    std::vector<std::string> findings{};
    std::vector<std::string> failures{};

    /// 0 when everything passed and nothing was found, 1 otherwise.
    int exit_code() const { return findings.empty() && failures.empty() ? 0 : 1; }
};

SweepRecord evaluate(const FamilyParams& f, const SweepOptions& options = {});

bool operator==(const SweepRecord& x, const SweepRecord& y);

} // namespace onebridge
