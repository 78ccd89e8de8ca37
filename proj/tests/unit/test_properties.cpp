#include <doctest.h>

#include "properties.hpp"

using namespace onebridge::test;

namespace {

constexpr std::size_t kCases = 1000;

void require(const PropertyResult& r)
{
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.cases >= kCases);
    CHECK(r.ok());
}

} // namespace

TEST_CASE("free group laws") { require(prop_free_group_laws(kCases)); }
TEST_CASE("substitution is a homomorphism") { require(prop_substitution_homomorphism(kCases)); }
TEST_CASE("braid relations hold in the symmetric group and under Burau") { require(prop_braid_relations(kCases)); }
TEST_CASE("the full twist is central") { require(prop_full_twist(kCases)); }
TEST_CASE("Burau is a homomorphism") { require(prop_burau_homomorphism(kCases)); }
TEST_CASE("Alexander polynomials of knots evaluate to 1 at t = 1") { require(prop_alexander_at_one(kCases)); }
TEST_CASE("Alexander polynomials of knots are symmetric") { require(prop_alexander_palindromic(kCases)); }
