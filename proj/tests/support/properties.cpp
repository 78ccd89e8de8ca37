#include "properties.hpp"

#include "generators.hpp"
#include "seed.hpp"

#include "onebridge/alexander.hpp"

#include <array>
#include <map>

namespace onebridge::test {

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { r_.name = std::move(name); }
    void record(bool ok, const std::string& what)
    {
        ++r_.cases;
        if (!ok && r_.failures++ == 0)
            r_.first_failure = what;
    }
    PropertyResult result() const { return r_; }

private:
    PropertyResult r_;
};

bool has_adjacent_inverse(const GroupWord& w)
{
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1].inverse())
            return true;
    return false;
}

BraidWord single(int strands, int index, int sign = 1) { return BraidWord(strands, {{index, sign}}); }

BraidWord full_twist(int strands)
{
    std::vector<BraidLetter> letters;
    for (int pass = 0; pass < strands; ++pass)
        for (int i = 1; i < strands; ++i)
            letters.push_back({i, 1});
    return BraidWord(strands, std::move(letters));
}

/// Random braid whose closure is a knot.
BraidWord random_knot_braid(std::mt19937_64& g)
{
    std::uniform_int_distribution<int> strands(2, 6);
    for (;;) {
        const BraidWord w = random_braid(g, strands(g), 16);
        if (is_knot(w))
            return w;
    }
}

} // namespace

PropertyResult prop_free_group_laws(std::size_t cases)
{
    Recorder rec("free-group laws");
    auto g = rng(1);
    const AlphabetPtr al = alphabet_abgd();
    for (std::size_t i = 0; i < cases; ++i) {
        const GroupWord u = random_word(g, al, 12), v = random_word(g, al, 12), w = random_word(g, al, 12);
        const GroupWord ru = reduce(u);
        const ExponentVector eu = exponent_vector(u), ev = exponent_vector(v), euv = exponent_vector(concat(u, v));
        bool additive = true;
        for (std::size_t j = 0; j < eu.size(); ++j)
            additive = additive && euv[j] == eu[j] + ev[j] && exponent_vector(invert(u))[j] == -eu[j];
        const bool ok = concat(concat(u, v), w) == concat(u, concat(v, w)) && concat(u, GroupWord(al)) == ru &&
                        concat(GroupWord(al), u) == ru && concat(u, invert(u)).empty() && reduce(ru) == ru &&
                        !has_adjacent_inverse(ru) && invert(invert(u)) == ru && additive;
        rec.record(ok, "u = " + to_string(u) + ", v = " + to_string(v) + ", w = " + to_string(w));
    }
    return rec.result();
}

PropertyResult prop_substitution_homomorphism(std::size_t cases)
{
    Recorder rec("substitution homomorphism");
    auto g = rng(2);
    const AlphabetPtr src = alphabet_abgd(), dst = alphabet_ab();
    for (std::size_t i = 0; i < cases; ++i) {
        std::map<int, GroupWord> images;
        for (int gen = 0; gen < 4; ++gen)
            images.emplace(gen, random_word(g, dst, 5));
        const GroupWord u = random_word(g, src, 10), v = random_word(g, src, 10);
        const GroupWord su = substitute(u, images);
        // exponent vector of the image = sum over letters of the image vectors
        const ExponentVector eu = exponent_vector(u);
        ExponentVector expect(2, 0);
        for (int gen = 0; gen < 4; ++gen) {
            const ExponentVector img = exponent_vector(images.at(gen));
            for (std::size_t j = 0; j < 2; ++j)
                expect[j] += eu[static_cast<std::size_t>(gen)] * img[j];
        }
        const bool ok = substitute(concat(u, v), images) == concat(su, substitute(v, images)) &&
                        substitute(invert(u), images) == invert(su) && exponent_vector(su) == expect;
        rec.record(ok, "u = " + to_string(u) + ", v = " + to_string(v));
    }
    return rec.result();
}

PropertyResult prop_braid_relations(std::size_t cases)
{
    Recorder rec("braid relations under h");
    auto g = rng(3);
    std::uniform_int_distribution<int> strands(3, 12);
    for (std::size_t i = 0; i < cases; ++i) {
        const int n = strands(g);
        std::uniform_int_distribution<int> idx(1, n - 2);
        std::uniform_int_distribution<int> any(1, n - 1);
        const BraidWord u = random_braid(g, n, 10), v = random_braid(g, n, 10);
        const int a = idx(g);
        const BraidWord lhs = compose(single(n, a), compose(single(n, a + 1), single(n, a)));
        const BraidWord rhs = compose(single(n, a + 1), compose(single(n, a), single(n, a + 1)));
        bool ok = induced_permutation(compose(u, compose(lhs, v))) == induced_permutation(compose(u, compose(rhs, v)));
        const int j = any(g), k = any(g);
        if (std::abs(j - k) >= 2)
            ok = ok && induced_permutation(compose(single(n, j), single(n, k))) ==
                           induced_permutation(compose(single(n, k), single(n, j)));
        ok = ok && induced_permutation(compose(u, v)) == induced_permutation(u) * induced_permutation(v);
        rec.record(ok, "strands " + std::to_string(n) + ", u = " + to_string(u) + ", v = " + to_string(v));
    }
    return rec.result();
}

PropertyResult prop_full_twist(std::size_t cases)
{
    Recorder rec("full twist acts trivially");
    auto g = rng(4);
    std::uniform_int_distribution<int> strands(3, 12);
    for (std::size_t i = 0; i < cases; ++i) {
        const int n = strands(g);
        const BraidWord w = random_braid(g, n, 12);
        const BraidWord twist = full_twist(n);
        const bool ok = induced_permutation(twist) == Permutation::identity(n) &&
                        induced_permutation(compose(twist, w)) == induced_permutation(w) &&
                        induced_permutation(compose(w, twist)) == induced_permutation(w);
        rec.record(ok, "strands " + std::to_string(n) + ", w = " + to_string(w));
    }
    return rec.result();
}

PropertyResult prop_burau_homomorphism(std::size_t cases)
{
    Recorder rec("Burau homomorphism");
    auto g = rng(5);
    std::uniform_int_distribution<int> strands(2, 6);
    for (std::size_t i = 0; i < cases; ++i) {
        const int n = strands(g);
        const BraidWord u = random_braid(g, n, 8), v = random_braid(g, n, 8);
        bool ok = burau_matrix(compose(u, v)) == burau_matrix(u) * burau_matrix(v);
        const auto id = LaurentMatrix::identity(static_cast<std::size_t>(n - 1));
        std::uniform_int_distribution<int> any(1, n - 1);
        const int a = any(g);
        ok = ok && burau_matrix(compose(single(n, a), single(n, a, -1))) == id;
        if (n >= 3) {
            std::uniform_int_distribution<int> idx(1, n - 2);
            const int b = idx(g);
            ok = ok && burau_matrix(compose(single(n, b), compose(single(n, b + 1), single(n, b)))) ==
                           burau_matrix(compose(single(n, b + 1), compose(single(n, b), single(n, b + 1))));
        }
        rec.record(ok, "strands " + std::to_string(n) + ", u = " + to_string(u) + ", v = " + to_string(v));
    }
    return rec.result();
}

PropertyResult prop_alexander_at_one(std::size_t cases)
{
    Recorder rec("Alexander polynomial at 1");
    auto g = rng(6);
    for (std::size_t i = 0; i < cases; ++i) {
        const BraidWord w = random_knot_braid(g);
        const LaurentPoly d = burau_alexander(w);
        rec.record(d.at_one() == 1 || d.at_one() == -1, to_string(w) + " gives " + to_string(d));
    }
    return rec.result();
}

PropertyResult prop_alexander_palindromic(std::size_t cases)
{
    Recorder rec("Alexander polynomial symmetry");
    auto g = rng(7);
    for (std::size_t i = 0; i < cases; ++i) {
        const BraidWord w = random_knot_braid(g);
        const LaurentPoly d = burau_alexander(w);
        rec.record(normalize(d) == normalize(d.reciprocal()), to_string(w) + " gives " + to_string(d));
    }
    return rec.result();
}

std::vector<PropertyResult> all_properties(std::size_t cases)
{
    return {prop_free_group_laws(cases),     prop_substitution_homomorphism(cases), prop_braid_relations(cases),
            prop_full_twist(cases),          prop_burau_homomorphism(cases),        prop_alexander_at_one(cases),
            prop_alexander_palindromic(cases)};
}

} // namespace onebridge::test
