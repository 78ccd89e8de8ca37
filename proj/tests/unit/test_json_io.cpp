#include <doctest.h>

#include "onebridge/error.hpp"
#include "onebridge/json_io.hpp"

using namespace onebridge;

TEST_CASE("sweep records round-trip")
{
    for (const auto& f : {FamilyParams{Family1{5, 1, 0}}, FamilyParams{Family2{2, 1, 1}}, FamilyParams{Family3{3, 1, 0}}}) {
        const SweepRecord r = evaluate(f);
        const Json j = to_json(r);
        CHECK(record_from_json(j) == r);
        CHECK(record_from_json(Json::parse(j.dump())) == r);
        CHECK(j.at("status") == "finding");
        CHECK(j.at("failures").empty());
        CHECK(r.exit_code() == 1);
    }
    const SweepRecord audited = evaluate(Family2{2, 1, 0}, {FramingPolicy::Audited, 0});
    CHECK(audited.bound->criterion_bound == Rational(18));
    CHECK(record_from_json(to_json(audited)) == audited);
}

TEST_CASE("values round-trip")
{
    const GroupWord w = parse_word(alphabet_ab(), "aBBab");
    CHECK(word_from_json(to_json(w)) == w);
    CHECK(to_json(w) == "a B B a b");
    for (const FamilyParams& f : {FamilyParams{Family1{9, 3, 2}}, FamilyParams{Family2{4, 2, 1}}, FamilyParams{Family3{5, 3, 0}}})
        CHECK(family_from_json(to_json(f)) == f);
    const OneBridgeParams p{7, 5, 4, 1};
    CHECK(params_from_json(to_json(p)) == p);
    const LaurentPoly q({3, 0, -2}, -1);
    CHECK(poly_from_json(to_json(q)) == q);
    CHECK(rational_from_json(to_json(Rational(-7, 3))) == Rational(-7, 3));
    const auto pres = family1_presentation(5, 1, 1);
    const auto audit = abelianize(pres);
    const auto back = audit_from_json(to_json(audit));
    CHECK(back.v_star == audit.v_star);
    CHECK(back.discrepancy == audit.discrepancy);
    const auto crit = criterion_check(pres);
    CHECK(criterion_from_json(to_json(crit)).pass() == crit.pass());
}

TEST_CASE("certificates round-trip through text")
{
    const auto pres = family3_presentation(3, 2, 1);
    const Certificate c = derive_beta_monotone(pres);
    const Json j = to_json(c);
    CHECK(j.at("format") == "onebridge-certificate");
    CHECK(j.at("version") == kCertificateFormatVersion);
    const Certificate back = certificate_from_json(Json::parse(j.dump(2)));
    CHECK(back.steps.size() == c.steps.size());
    CHECK(back.conclusion == c.conclusion);
    CHECK(to_json(back) == j);
    CHECK(verify_certificate(back, pres).ok);
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(word_from_json(Json(12)), InvalidParameters);
    CHECK_THROWS_AS(word_from_json(Json("a c")), InvalidParameters);
    CHECK_THROWS_AS(family_from_json(Json{{"family", 4}, {"w", 5}, {"k", 1}, {"m", 0}}), InvalidParameters);
    CHECK_THROWS_AS(family_from_json(Json{{"family", 1}, {"k", 1}, {"m", 0}}), InvalidParameters);
    CHECK_THROWS_AS(family_from_json(Json{{"family", 1}, {"w", 2}, {"k", 1}, {"m", 0}}), InvalidParameters);
    CHECK_THROWS_AS(rational_from_json(Json{{"numerator", 1}, {"denominator", 0}}), InvalidParameters);
    CHECK_THROWS_AS(fact_from_json(Json{{"lhs", "a"}, {"relation", "<"}, {"rhs", ""}}), InvalidParameters);
    CHECK_THROWS_AS(record_from_json(Json::array()), InvalidParameters);

    Json c = to_json(derive_beta_monotone(family1_presentation(5, 1, 0)));
    Json future = c;
    future["version"] = kCertificateFormatVersion + 1;
    CHECK_THROWS_AS(certificate_from_json(future), InvalidParameters);
    Json foreign = c;
    foreign["format"] = "something-else";
    CHECK_THROWS_AS(certificate_from_json(foreign), InvalidParameters);
    Json bad_rule = c;
    bad_rule["steps"][1]["rule"] = "Guess";
    CHECK_THROWS_AS(certificate_from_json(bad_rule), InvalidParameters);
    Json bad_side = c;
    bad_side["steps"][1]["side"] = "middle";
    CHECK_THROWS_AS(certificate_from_json(bad_side), InvalidParameters);
}
