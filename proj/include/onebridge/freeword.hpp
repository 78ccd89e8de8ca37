#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace onebridge {

/// Ordered list of generator names. Words only interoperate when their
/// alphabets list the same names in the same order.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t gen) const { return names_.at(gen); }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of `name`, or -1.
    int find(std::string_view name) const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// {a, b}: the two handlebody generators (alpha, beta).
AlphabetPtr alphabet_ab();
/// {a, b, g, d}: alpha, beta, gamma, delta of the genus-2 splitting.
AlphabetPtr alphabet_abgd();

struct Letter {
    int gen = 0;
    int sign = 1; // +1 or -1

    Letter inverse() const { return {gen, -sign}; }
    bool operator==(const Letter&) const = default;
};

/// A word in a free group. Not necessarily reduced: `reduce` and the
/// group operations below return reduced words, while `append_raw` and
/// the raw constructor keep letters verbatim so derivations can refer to
/// positions in unreduced products.
class GroupWord {
public:
    explicit GroupWord(AlphabetPtr alphabet, std::vector<Letter> letters = {});

    static GroupWord generator(AlphabetPtr alphabet, int gen, int sign = 1);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    /// Concatenation without cancellation.
    GroupWord& append_raw(const GroupWord& other);
    GroupWord& append_raw(Letter l);

    /// Letters [pos, pos + len) as a new (unreduced) word.
    GroupWord subword(std::size_t pos, std::size_t len) const;

    bool is_reduced() const;

    /// Letterwise equality (no reduction). Throws on alphabet mismatch.
    bool operator==(const GroupWord& other) const;

private:
    AlphabetPtr alphabet_;
    std::vector<Letter> letters_;
};

using ExponentVector = std::vector<std::int64_t>;

void require_same_alphabet(const GroupWord& u, const GroupWord& v);

GroupWord reduce(const GroupWord& w);
GroupWord invert(const GroupWord& w);
GroupWord concat(const GroupWord& u, const GroupWord& v);
GroupWord power(const GroupWord& w, std::int64_t e);
/// Raw (unreduced) repetition; negative exponents repeat the inverse.
GroupWord power_raw(const GroupWord& w, std::int64_t e);

/// Product of reduced words, so `a * b * inverse(c)` reads like the algebra.
inline GroupWord operator*(const GroupWord& u, const GroupWord& v) { return concat(u, v); }

/// Homomorphic image. `images[g]` is the image of generator g; the image
/// words must share one alphabet. Throws InvalidParameters on a missing image.
GroupWord substitute(const GroupWord& w, const std::map<int, GroupWord>& images);

ExponentVector exponent_vector(const GroupWord& w);

/// True iff no inverse letter of any generator in `gens` occurs.
bool is_positive(const GroupWord& w, std::span<const int> gens);
/// Number of occurrences of generator `gen` with sign `sign`.
std::size_t count_letter(const GroupWord& w, int gen, int sign);

bool free_equal(const GroupWord& u, const GroupWord& v);

/// Reduced and with matching first/last letters stripped.
GroupWord cyclic_reduce(const GroupWord& w);

/// Splits reduce(w) = c * core * c^-1 with core cyclically reduced.
struct CyclicSplit {
    GroupWord conjugator;
    GroupWord core;
};
CyclicSplit cyclic_split(const GroupWord& w);

/// Left rotation by `shift` letters.
GroupWord rotate(const GroupWord& w, std::size_t shift);

/// If the cyclic reductions of u and v are cyclic rotations of each other,
/// returns the rotation amount taking cyclic_reduce(v) to cyclic_reduce(u).
std::ptrdiff_t rotation_offset(const GroupWord& u, const GroupWord& v);

/// u and v are conjugate in the free group.
bool free_conjugate(const GroupWord& u, const GroupWord& v);

/// u is conjugate to v or to v^-1: the equivalence used to compare
/// relators produced by different elimination orders.
bool same_relator(const GroupWord& u, const GroupWord& v);

/// Text syntax: space-separated generator names, an upper-cased name is the
/// inverse ("a B a a"). When every name is one character the spaces may be
/// omitted ("aBaa"). "1" or "" is the empty word.
GroupWord parse_word(const AlphabetPtr& alphabet, std::string_view text);
std::string to_string(const GroupWord& w);

} // namespace onebridge
