#include <doctest.h>

#include "onebridge/error.hpp"
#include "onebridge/freeword.hpp"

#include <algorithm>
#include <array>
#include <cctype>

using namespace onebridge;

namespace {

GroupWord ab(std::string_view s) { return parse_word(alphabet_ab(), s); }
GroupWord abgd(std::string_view s) { return parse_word(alphabet_abgd(), s); }

/// Repeatedly deletes the leftmost cancelling pair until none is left.
std::string rescan_reduce(std::string s)
{
    auto inverse = [](char x, char y) { return x != y && std::tolower(x) == std::tolower(y); };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (inverse(s[i], s[i + 1])) {
                s.erase(i, 2);
                changed = true;
                break;
            }
    }
    return s;
}

std::string compact(const GroupWord& w)
{
    std::string s = to_string(w);
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

} // namespace

TEST_CASE("reduce cancels adjacent inverse pairs")
{
    CHECK(reduce(ab("abBa")) == ab("aa"));
    CHECK(reduce(GroupWord(alphabet_ab())).empty());
    const std::string raw = "abab" "A" "BA";
    const GroupWord w = ab(raw);
    CHECK(compact(reduce(w)) == rescan_reduce(raw));
    CHECK(reduce(reduce(w)) == reduce(w));
}

TEST_CASE("reduce agrees with the rescanning oracle on nested cancellations")
{
    for (const char* s : {"abBAab", "aAbBaAbB", "abABbaBA", "aabbBBAAb", "ABbaab"})
        CHECK(compact(reduce(ab(s))) == rescan_reduce(s));
}

TEST_CASE("inverse, product and power")
{
    CHECK(invert(ab("ab")) == ab("BA"));
    CHECK(power(ab("ba"), 2) == ab("baba"));
    CHECK(power(ab("ba"), -1) == ab("AB"));
    CHECK(power(ab("ba"), 0).empty());
    const GroupWord w = ab("abbAB");
    CHECK(concat(w, invert(w)).empty());
    CHECK(concat(ab("ab"), ab("Ba")) == ab("aa"));
}

TEST_CASE("mixing alphabets is an error")
{
    CHECK_THROWS_AS(concat(ab("a"), abgd("a")), AlphabetMismatch);
    CHECK_THROWS_AS((void)(ab("a") == abgd("a")), AlphabetMismatch);
}

TEST_CASE("substitute is the homomorphic image")
{
    const std::map<int, GroupWord> gd{{2, ab("a")}, {3, ab("b")}};
    CHECK(substitute(abgd("gd"), gd) == ab("ab"));
    const std::map<int, GroupWord> g_ab{{2, ab("ab")}};
    CHECK(substitute(abgd("G"), g_ab) == ab("BA"));
    CHECK_THROWS_AS(substitute(abgd("gd"), g_ab), InvalidParameters);
}

TEST_CASE("exponent vectors")
{
    CHECK(exponent_vector(ab("bab")) == ExponentVector{1, 2});
    CHECK(exponent_vector(GroupWord(alphabet_abgd())) == ExponentVector{0, 0, 0, 0});
    const GroupWord w = ab("abAAbbB");
    const ExponentVector e = exponent_vector(w), ei = exponent_vector(invert(w));
    CHECK(ei[0] == -e[0]);
    CHECK(ei[1] == -e[1]);
}

TEST_CASE("positivity, free equality and cyclic reduction")
{
    const std::array<int, 2> gens{0, 1};
    CHECK(is_positive(ab("abab bbab"), gens));
    CHECK_FALSE(is_positive(ab("aB"), gens));
    const std::array<int, 1> only_a{0};
    CHECK(is_positive(ab("aB"), only_a));
    CHECK(free_equal(ab("abBa"), ab("aa")));
    CHECK_FALSE(free_equal(ab("ab"), ab("ba")));
    const GroupWord w = ab("babbA");
    CHECK(cyclic_reduce(concat(ab("a"), concat(w, ab("A")))) == cyclic_reduce(w));
    CHECK(cyclic_reduce(ab("abaBA")) == ab("a"));
}

TEST_CASE("cyclic split, rotation and conjugacy")
{
    const CyclicSplit s = cyclic_split(ab("abbaBA"));
    CHECK(s.conjugator == ab("ab"));
    CHECK(s.core == ab("ba"));
    CHECK(rotate(ab("aab"), 1) == ab("aba"));
    CHECK(rotation_offset(ab("aba"), ab("aab")) == 1);
    CHECK(rotation_offset(ab("abb"), ab("aab")) == -1);
    CHECK(free_conjugate(ab("abAB"), ab("BabA")));
    CHECK_FALSE(free_conjugate(ab("abAB"), ab("BAba")));
    CHECK(same_relator(ab("abAB"), ab("BAba")));
    CHECK(same_relator(ab("abAB"), invert(ab("abAB"))));
    CHECK_FALSE(same_relator(ab("ab"), ab("aB")));
}

TEST_CASE("word syntax round-trips")
{
    CHECK(to_string(ab("a B a a")) == "a B a a");
    CHECK(ab("aBaa") == ab("a B a a"));
    CHECK(ab("1").empty());
    CHECK(ab("").empty());
    CHECK_THROWS_AS(ab("c"), InvalidParameters);
    CHECK_THROWS_AS(parse_word(alphabet_abgd(), "aB gX"), InvalidParameters);
}
