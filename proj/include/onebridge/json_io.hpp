#pragma once

#include "onebridge/report.hpp"

#include <json.hpp>

namespace onebridge {

using Json = nlohmann::json;

/// Version of the certificate format written by to_json(const Certificate&).
inline constexpr int kCertificateFormatVersion = 1;

Json to_json(const GroupWord& w);
Json to_json(const FamilyParams& f);
Json to_json(const OneBridgeParams& p);
Json to_json(const KnotGroupPresentation& p);
Json to_json(const AbelianizationReport& r);
Json to_json(const LaurentPoly& p);
Json to_json(const IneqFact& f);
Json to_json(const Certificate& c);
Json to_json(const VerificationResult& v);
Json to_json(const CriterionReport& c);
Json to_json(const Rational& q);
Json to_json(const SlopeBound& b);
Json to_json(const RewriteStep& s);
Json to_json(const FramingSimplification& s);
Json to_json(const SweepRecord& r);

/// Readers throw InvalidParameters on malformed input.
GroupWord word_from_json(const Json& j, const AlphabetPtr& alphabet = alphabet_ab());
FamilyParams family_from_json(const Json& j);
OneBridgeParams params_from_json(const Json& j);
AbelianizationReport audit_from_json(const Json& j);
LaurentPoly poly_from_json(const Json& j);
IneqFact fact_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
CriterionReport criterion_from_json(const Json& j);
Rational rational_from_json(const Json& j);
SlopeBound bound_from_json(const Json& j);
SweepRecord record_from_json(const Json& j);

} // namespace onebridge
