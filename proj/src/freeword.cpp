#include "onebridge/freeword.hpp"

#include "onebridge/error.hpp"

#include <algorithm>
#include <cctype>

namespace onebridge {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names))
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const auto& n = names_[i];
        if (n.empty() || !std::all_of(n.begin(), n.end(), [](unsigned char c) { return std::islower(c) || std::isdigit(c) || c == '_'; }))
            throw InvalidParameters("generator names must be non-empty lowercase identifiers: '" + n + "'");
        if (std::find(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(i), n) != names_.begin() + static_cast<std::ptrdiff_t>(i))
            throw InvalidParameters("duplicate generator name '" + n + "'");
    }
}

int Alphabet::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    return -1;
}

AlphabetPtr alphabet_ab()
{
    static const AlphabetPtr ab = std::make_shared<const Alphabet>(std::vector<std::string>{"a", "b"});
    return ab;
}

AlphabetPtr alphabet_abgd()
{
    static const AlphabetPtr abgd = std::make_shared<const Alphabet>(std::vector<std::string>{"a", "b", "g", "d"});
    return abgd;
}

GroupWord::GroupWord(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters))
{
    if (!alphabet_)
        throw InvalidParameters("word without alphabet");
    for (const auto& l : letters_)
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= alphabet_->size() || (l.sign != 1 && l.sign != -1))
            throw InvalidParameters("letter outside alphabet");
}

GroupWord GroupWord::generator(AlphabetPtr alphabet, int gen, int sign)
{
    return GroupWord(std::move(alphabet), {Letter{gen, sign}});
}

void require_same_alphabet(const GroupWord& u, const GroupWord& v)
{
    if (u.alphabet() != v.alphabet() && !(*u.alphabet() == *v.alphabet()))
        throw AlphabetMismatch("words over different alphabets");
}

GroupWord& GroupWord::append_raw(const GroupWord& other)
{
    require_same_alphabet(*this, other);
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

GroupWord& GroupWord::append_raw(Letter l)
{
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= alphabet_->size() || (l.sign != 1 && l.sign != -1))
        throw InvalidParameters("letter outside alphabet");
    letters_.push_back(l);
    return *this;
}

GroupWord GroupWord::subword(std::size_t pos, std::size_t len) const
{
    if (pos > letters_.size() || len > letters_.size() - pos)
        throw InvalidParameters("subword out of range");
    return GroupWord(alphabet_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool GroupWord::is_reduced() const
{
    for (std::size_t i = 1; i < letters_.size(); ++i)
        if (letters_[i] == letters_[i - 1].inverse())
            return false;
    return true;
}

bool GroupWord::operator==(const GroupWord& other) const
{
    require_same_alphabet(*this, other);
    return letters_ == other.letters_;
}

GroupWord reduce(const GroupWord& w)
{
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const auto& l : w.letters()) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    }
    return GroupWord(w.alphabet(), std::move(out));
}

GroupWord invert(const GroupWord& w)
{
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(it->inverse());
    return reduce(GroupWord(w.alphabet(), std::move(out)));
}

GroupWord concat(const GroupWord& u, const GroupWord& v)
{
    GroupWord out = u;
    out.append_raw(v);
    return reduce(out);
}

GroupWord power_raw(const GroupWord& w, std::int64_t e)
{
    GroupWord base = w;
    if (e < 0) {
        std::vector<Letter> inv;
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
            inv.push_back(it->inverse());
        base = GroupWord(w.alphabet(), std::move(inv));
        e = -e;
    }
    GroupWord out(w.alphabet());
    for (std::int64_t i = 0; i < e; ++i)
        out.append_raw(base);
    return out;
}

GroupWord power(const GroupWord& w, std::int64_t e)
{
    return reduce(power_raw(reduce(w), e));
}

GroupWord substitute(const GroupWord& w, const std::map<int, GroupWord>& images)
{
    if (images.empty())
        throw InvalidParameters("substitution without images");
    const AlphabetPtr& target = images.begin()->second.alphabet();
    for (const auto& [gen, img] : images)
        if (!(*img.alphabet() == *target))
            throw AlphabetMismatch("substitution images over different alphabets");

    std::map<int, GroupWord> inverses;
    GroupWord out(target);
    for (const auto& l : w.letters()) {
        auto it = images.find(l.gen);
        if (it == images.end())
            throw InvalidParameters("no image for generator '" + w.alphabet()->name(static_cast<std::size_t>(l.gen)) + "'");
        if (l.sign > 0) {
            out.append_raw(it->second);
        } else {
            auto inv = inverses.find(l.gen);
            if (inv == inverses.end())
                inv = inverses.emplace(l.gen, invert(it->second)).first;
            out.append_raw(inv->second);
        }
    }
    return reduce(out);
}

ExponentVector exponent_vector(const GroupWord& w)
{
    ExponentVector v(w.alphabet()->size(), 0);
    for (const auto& l : w.letters())
        v[static_cast<std::size_t>(l.gen)] += l.sign;
    return v;
}

bool is_positive(const GroupWord& w, std::span<const int> gens)
{
    for (const auto& l : w.letters())
        if (l.sign < 0 && std::find(gens.begin(), gens.end(), l.gen) != gens.end())
            return false;
    return true;
}

std::size_t count_letter(const GroupWord& w, int gen, int sign)
{
    return static_cast<std::size_t>(std::count(w.letters().begin(), w.letters().end(), Letter{gen, sign}));
}

bool free_equal(const GroupWord& u, const GroupWord& v)
{
    return reduce(u) == reduce(v);
}

CyclicSplit cyclic_split(const GroupWord& w)
{
    GroupWord r = reduce(w);
    std::size_t lo = 0;
    std::size_t hi = r.size();
    while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return {r.subword(0, lo), r.subword(lo, hi - lo)};
}

GroupWord cyclic_reduce(const GroupWord& w)
{
    return cyclic_split(w).core;
}

GroupWord rotate(const GroupWord& w, std::size_t shift)
{
    if (w.empty())
        return w;
    shift %= w.size();
    std::vector<Letter> out(w.letters().begin() + static_cast<std::ptrdiff_t>(shift), w.letters().end());
    out.insert(out.end(), w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(shift));
    return GroupWord(w.alphabet(), std::move(out));
}

std::ptrdiff_t rotation_offset(const GroupWord& u, const GroupWord& v)
{
    require_same_alphabet(u, v);
    const GroupWord cu = cyclic_reduce(u);
    const GroupWord cv = cyclic_reduce(v);
    if (cu.size() != cv.size())
        return -1;
    if (cu.empty())
        return 0;
    const auto a = cu.letters();
    const auto b = cv.letters();
    const std::size_t n = a.size();
    // b rotated left by s equals a  <=>  a occurs in b+b at offset s.
    for (std::size_t s = 0; s < n; ++s) {
        if (b[s] != a[0])
            continue;
        std::size_t i = 0;
        while (i < n && b[(s + i) % n] == a[i])
            ++i;
        if (i == n)
            return static_cast<std::ptrdiff_t>(s);
    }
    return -1;
}

bool free_conjugate(const GroupWord& u, const GroupWord& v)
{
    return rotation_offset(u, v) >= 0;
}

bool same_relator(const GroupWord& u, const GroupWord& v)
{
    return free_conjugate(u, v) || free_conjugate(u, invert(v));
}

GroupWord parse_word(const AlphabetPtr& alphabet, std::string_view text)
{
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty())
                tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        tokens.push_back(std::move(cur));

    const bool single_char = std::all_of(alphabet->names().begin(), alphabet->names().end(),
                                         [](const std::string& n) { return n.size() == 1; });

    GroupWord out(alphabet);
    auto push_token = [&](const std::string& tok) {
        const bool has_upper = std::any_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isupper(c); });
        const bool has_lower = std::any_of(tok.begin(), tok.end(), [](unsigned char c) { return std::islower(c); });
        if (has_upper && has_lower)
            throw InvalidParameters("mixed-case generator token '" + tok + "'");
        std::string lower;
        for (char c : tok)
            lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        const int gen = alphabet->find(lower);
        if (gen < 0)
            throw InvalidParameters("unknown generator '" + tok + "'");
        out.append_raw(Letter{gen, has_upper ? -1 : 1});
    };

    for (const auto& tok : tokens) {
        if (tok == "1")
            continue;
        if (!single_char || tok.size() == 1) {
            push_token(tok);
        } else {
            for (char c : tok)
                push_token(std::string(1, c));
        }
    }
    return out;
}

std::string to_string(const GroupWord& w)
{
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty())
            out.push_back(' ');
        std::string name = w.alphabet()->name(static_cast<std::size_t>(l.gen));
        if (l.sign < 0)
            for (auto& c : name)
                c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        out += name;
    }
    return out;
}

} // namespace onebridge
