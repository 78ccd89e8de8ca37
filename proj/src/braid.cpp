#include "onebridge/braid.hpp"

#include "onebridge/error.hpp"
#include "detail.hpp"

#include <sstream>

namespace onebridge {

using detail::Overloaded;

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters))
{
    if (strands_ < 2)
        throw InvalidParameters("a braid needs at least 2 strands");
    for (const auto& l : letters_)
        if (l.index < 1 || l.index > strands_ - 1 || (l.sign != 1 && l.sign != -1))
            throw InvalidParameters("braid generator index out of range");
}

BraidWord compose(const BraidWord& left, const BraidWord& right)
{
    if (left.strands() != right.strands())
        throw InvalidParameters("strand counts differ");
    std::vector<BraidLetter> letters(left.letters().begin(), left.letters().end());
    letters.insert(letters.end(), right.letters().begin(), right.letters().end());
    return BraidWord(left.strands(), std::move(letters));
}

std::int64_t exponent_sum(const BraidWord& w)
{
    std::int64_t e = 0;
    for (const auto& l : w.letters())
        e += l.sign;
    return e;
}

bool is_positive(const BraidWord& w)
{
    for (const auto& l : w.letters())
        if (l.sign < 0)
            return false;
    return true;
}

Permutation Permutation::identity(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        images[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycle(int n, std::span<const int> cycle)
{
    std::vector<int> images = identity(n).images();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int from = cycle[i];
        if (from < 1 || from > n || seen[static_cast<std::size_t>(from)])
            throw InvalidParameters("malformed cycle");
        seen[static_cast<std::size_t>(from)] = true;
        images[static_cast<std::size_t>(from - 1)] = cycle[(i + 1) % cycle.size()];
    }
    return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[static_cast<std::size_t>(v)])
            throw InvalidParameters("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> cyc;
        for (int i = start; !seen[static_cast<std::size_t>(i)]; i = (*this)(i)) {
            seen[static_cast<std::size_t>(i)] = true;
            cyc.push_back(i);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

bool Permutation::is_single_cycle() const
{
    return cycles().size() == 1;
}

std::string Permutation::cycle_string() const
{
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
        if (c.size() == 1)
            continue;
        any = true;
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i)
            os << (i ? " " : "") << c[i];
        os << ')';
    }
    return any ? os.str() : "()";
}

Permutation operator*(const Permutation& p, const Permutation& q)
{
    if (p.size() != q.size())
        throw InvalidParameters("permutation sizes differ");
    std::vector<int> images(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i)
        images[static_cast<std::size_t>(i - 1)] = p(q(i));
    return Permutation(std::move(images));
}

Permutation induced_permutation(const BraidWord& w)
{
    // images[x] tracks where x ends up; the rightmost letter acts first.
    std::vector<int> images = Permutation::identity(w.strands()).images();
    const auto letters = w.letters();
    for (std::size_t x = 0; x < images.size(); ++x) {
        int pos = static_cast<int>(x) + 1;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            if (pos == it->index)
                pos = it->index + 1;
            else if (pos == it->index + 1)
                pos = it->index;
        }
        images[x] = pos;
    }
    return Permutation(std::move(images));
}

bool is_knot(const BraidWord& w)
{
    return induced_permutation(w).is_single_cycle();
}

void OneBridgeParams::validate() const
{
    if (w < 3)
        throw InvalidParameters("w must be at least 3");
    if (t < 1 || t > w - 2)
        throw InvalidParameters("t must satisfy 1 <= t <= w - 2");
    if (b < 1 || b > w - 1)
        throw InvalidParameters("b must satisfy 1 <= b <= w - 1");
    if (m < 0)
        throw InvalidParameters("m must be non-negative");
}

namespace {

struct Validator {
    void operator()(const Family1& f) const
    {
        if (f.w < 3)
            throw InvalidParameters("family 1 needs w >= 3");
        if (f.k < 1 || f.k > (f.w - 1) / 2)
            throw InvalidParameters("family 1 needs 1 <= k <= floor((w - 1) / 2)");
        if (f.m < 0)
            throw InvalidParameters("m must be non-negative");
    }
    void operator()(const Family2& f) const { check(f.n, f.k, f.m, 2); }
    void operator()(const Family3& f) const { check(f.n, f.k, f.m, 3); }
    static void check(int n, int k, int m, int family)
    {
        const std::string name = "family " + std::to_string(family);
        if (n < 2)
            throw InvalidParameters(name + " needs n >= 2");
        if (k < 1 || k > n - 1)
            throw InvalidParameters(name + " needs 1 <= k <= n - 1");
        if (m < 0)
            throw InvalidParameters("m must be non-negative");
    }
};

void append_range(std::vector<int>& out, int from, int to, int step)
{
    if (step > 0)
        for (int i = from; i <= to; i += step)
            out.push_back(i);
    else
        for (int i = from; i >= to; i += step)
            out.push_back(i);
}

} // namespace

void validate(const FamilyParams& f)
{
    std::visit(Validator{}, f);
}

int family_index(const FamilyParams& f)
{
    return static_cast<int>(f.index()) + 1;
}

int family_m(const FamilyParams& f)
{
    return std::visit([](const auto& v) { return v.m; }, f);
}

OneBridgeParams to_one_bridge(const FamilyParams& f)
{
    validate(f);
    return std::visit(Overloaded{
                          [](const Family1& v) { return OneBridgeParams{v.w, 1, 2 * v.k, v.m}; },
                          [](const Family2& v) { return OneBridgeParams{2 * v.n + 1, 2 * v.n - 1, 2 * v.k, v.m}; },
                          [](const Family3& v) { return OneBridgeParams{2 * v.n, 2 * v.n - 2, 2 * v.k - 1, v.m}; },
                      },
                      f);
}

std::string describe(const FamilyParams& f)
{
    return std::visit(Overloaded{
                          [](const Family1& v) {
                              return "family1(w=" + std::to_string(v.w) + ", k=" + std::to_string(v.k) + ", m=" + std::to_string(v.m) + ")";
                          },
                          [](const Family2& v) {
                              return "family2(n=" + std::to_string(v.n) + ", k=" + std::to_string(v.k) + ", m=" + std::to_string(v.m) + ")";
                          },
                          [](const Family3& v) {
                              return "family3(n=" + std::to_string(v.n) + ", k=" + std::to_string(v.k) + ", m=" + std::to_string(v.m) + ")";
                          },
                      },
                      f);
}

BraidWord one_bridge_word(const OneBridgeParams& p)
{
    p.validate();
    std::vector<BraidLetter> letters;
    const std::int64_t passes = p.twist();
    letters.reserve(static_cast<std::size_t>(p.b + (p.w - 1) * passes));
    for (int i = 1; i <= p.b; ++i)
        letters.push_back({i, 1});
    for (std::int64_t r = 0; r < passes; ++r)
        for (int i = 1; i <= p.w - 1; ++i)
            letters.push_back({i, 1});
    return BraidWord(p.w, std::move(letters));
}

Permutation closed_form_permutation(const FamilyParams& f)
{
    validate(f);
    std::vector<int> cycle;
    int n_points = 0;
    std::visit(Overloaded{
                   [&](const Family1& v) {
                       // (1, 3, ..., 2k-1, 2k+1, 2k+2, ..., w, 2, 4, ..., 2k)
                       n_points = v.w;
                       append_range(cycle, 1, 2 * v.k - 1, 2);
                       append_range(cycle, 2 * v.k + 1, v.w, 1);
                       append_range(cycle, 2, 2 * v.k, 2);
                   },
                   [&](const Family2& v) {
                       // (1, 2n, 2n-2, ..., 2k+2, 2k+1, 2k, ..., 2, 2n+1, 2n-1, ..., 2k+3)
                       n_points = 2 * v.n + 1;
                       cycle.push_back(1);
                       append_range(cycle, 2 * v.n, 2 * v.k + 2, -2);
                       append_range(cycle, 2 * v.k + 1, 2, -1);
                       append_range(cycle, 2 * v.n + 1, 2 * v.k + 3, -2);
                   },
                   [&](const Family3& v) {
                       // (1, 2n-1, 2n-3, ..., 2k+1, 2k, 2k-1, ..., 2, 2n, 2n-2, ..., 2k+2)
                       n_points = 2 * v.n;
                       cycle.push_back(1);
                       append_range(cycle, 2 * v.n - 1, 2 * v.k + 1, -2);
                       append_range(cycle, 2 * v.k, 2, -1);
                       append_range(cycle, 2 * v.n, 2 * v.k + 2, -2);
                   },
               },
               f);
    if (static_cast<int>(cycle.size()) != n_points)
        throw DerivationError("closed-form cycle does not cover every endpoint");
    return Permutation::from_cycle(n_points, cycle);
}

std::int64_t claimed_surface_framing(const OneBridgeParams& p)
{
    p.validate();
    return static_cast<std::int64_t>(p.w - 1) * p.twist() + p.b;
}

std::vector<FamilyParams> family1_sweep(int max_w, int max_m)
{
    std::vector<FamilyParams> out;
    for (int w = 3; w <= max_w; ++w)
        for (int k = 1; k <= (w - 2) / 2; ++k)
            for (int m = 0; m <= max_m; ++m)
                out.emplace_back(Family1{w, k, m});
    return out;
}

std::vector<FamilyParams> family2_sweep(int max_n, int max_m)
{
    std::vector<FamilyParams> out;
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (int m = 0; m <= max_m; ++m)
                out.emplace_back(Family2{n, k, m});
    return out;
}

std::vector<FamilyParams> family3_sweep(int max_n, int max_m)
{
    std::vector<FamilyParams> out;
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (int m = 0; m <= max_m; ++m)
                out.emplace_back(Family3{n, k, m});
    return out;
}

std::string to_string(const BraidWord& w)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& l = w.letters()[i];
        os << (i ? " " : "") << 's' << l.index;
        if (l.sign < 0)
            os << "^-1";
    }
    return w.empty() ? std::string("1") : os.str();
}

} // namespace onebridge
