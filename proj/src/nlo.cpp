#include "onebridge/nlo.hpp"

#include "onebridge/error.hpp"
#include "onebridge/homology.hpp"
#include "detail.hpp"

#include <array>
#include <deque>
#include <map>
#include <set>

namespace onebridge {

using detail::gpow;
using detail::Overloaded;

namespace {

constexpr int kA = 0;
constexpr int kB = 1;

AlphabetPtr ab() { return alphabet_ab(); }

GroupWord empty_word() { return GroupWord(ab()); }

GroupWord erase_letter(const GroupWord& w, std::size_t pos)
{
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pos));
    return GroupWord(w.alphabet(), std::move(letters));
}

GroupWord insert_letter(const GroupWord& w, std::size_t pos, Letter l)
{
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos), l);
    return GroupWord(w.alphabet(), std::move(letters));
}

GroupWord raw_concat(const GroupWord& x, const GroupWord& y)
{
    GroupWord out = x;
    out.append_raw(y);
    return out;
}

Relation compose_relation(Relation x, Relation y)
{
    if (x == Relation::Greater || y == Relation::Greater)
        return Relation::Greater;
    if (x == Relation::Equal && y == Relation::Equal)
        return Relation::Equal;
    return Relation::GreaterEqual;
}

bool is_relator_rotation(const GroupWord& w, const GroupWord& relator)
{
    const GroupWord c = cyclic_reduce(w);
    if (c.empty())
        return false;
    return rotation_offset(c, relator) >= 0 || rotation_offset(c, invert(relator)) >= 0;
}

/// Unreduced word under construction; `marks` records letter positions.
struct RawBuilder {
    std::vector<Letter> letters;
    std::vector<std::size_t> marks;

    void put(int gen, int sign, bool mark = false)
    {
        if (mark)
            marks.push_back(letters.size());
        letters.push_back({gen, sign});
    }
    void pow(int gen, std::int64_t e)
    {
        for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i)
            put(gen, e < 0 ? -1 : 1);
    }
    void mark_here() { marks.push_back(letters.size()); }
    GroupWord word() const { return GroupWord(ab(), letters); }
};

class CertificateBuilder {
public:
    std::size_t add(DerivationStep s)
    {
        steps_.push_back(std::move(s));
        return steps_.size() - 1;
    }
    const IneqFact& fact(std::size_t i) const { return steps_.at(i).result; }
    std::size_t last() const { return steps_.size() - 1; }

    std::size_t relator_equality(GroupWord u, GroupWord v)
    {
        DerivationStep s;
        s.rule = Rule::RelatorEquality;
        s.result = {std::move(u), Relation::Equal, std::move(v)};
        return add(std::move(s));
    }
    std::size_t delete_alpha(Side side, std::size_t pos)
    {
        const std::size_t in = last();
        IneqFact r = fact(in);
        r.relation = Relation::Greater;
        (side == Side::Rhs ? r.rhs : r.lhs) = erase_letter(side == Side::Rhs ? r.rhs : r.lhs, pos);
        return add(DerivationStep{Rule::DeleteAlpha, {in}, side, pos, empty_word(), std::move(r)});
    }
    std::size_t insert_alpha_inverse(Side side, std::size_t pos)
    {
        const std::size_t in = last();
        IneqFact r = fact(in);
        r.relation = Relation::Greater;
        if (side == Side::Rhs)
            r.rhs = insert_letter(r.rhs, pos, {kA, -1});
        else
            r.lhs = insert_letter(r.lhs, pos, {kA, 1});
        return add(DerivationStep{Rule::InsertAlphaInverse, {in}, side, pos, empty_word(), std::move(r)});
    }
    std::size_t free_reduce()
    {
        const std::size_t in = last();
        IneqFact r = fact(in);
        r.lhs = reduce(r.lhs);
        r.rhs = reduce(r.rhs);
        return add(DerivationStep{Rule::FreeReduce, {in}, Side::Rhs, 0, empty_word(), std::move(r)});
    }
    std::size_t prepend(const GroupWord& w)
    {
        const std::size_t in = last();
        IneqFact r = fact(in);
        r.lhs = raw_concat(w, r.lhs);
        r.rhs = raw_concat(w, r.rhs);
        return add(DerivationStep{Rule::PrependWord, {in}, Side::Rhs, 0, w, std::move(r)});
    }
    std::size_t append(const GroupWord& w)
    {
        const std::size_t in = last();
        IneqFact r = fact(in);
        r.lhs = raw_concat(r.lhs, w);
        r.rhs = raw_concat(r.rhs, w);
        return add(DerivationStep{Rule::AppendWord, {in}, Side::Rhs, 0, w, std::move(r)});
    }

    Certificate finish()
    {
        Certificate c;
        c.conclusion = steps_.back().result;
        c.steps = std::move(steps_);
        return c;
    }

private:
    std::vector<DerivationStep> steps_;
};

void expect_fact(const IneqFact& f, const GroupWord& lhs, const GroupWord& rhs, const char* what)
{
    if (!(f.lhs == lhs) || !(f.rhs == rhs))
        throw DerivationError(std::string(what) + ": got '" + to_string(f.lhs) + "' vs '" + to_string(f.rhs) + "'");
}

/// From  1 > R  with R freely w B w^-1, finish at b > 1.
Certificate finish_from_beta_inverse(CertificateBuilder& cb)
{
    const CyclicSplit split = cyclic_split(cb.fact(cb.last()).rhs);
    if (!split.conjugator.empty()) {
        cb.prepend(invert(split.conjugator));
        cb.append(split.conjugator);
    }
    cb.free_reduce();
    expect_fact(cb.fact(cb.last()), empty_word(), gpow(ab(), kB, -1), "expected 1 > B");
    cb.prepend(gpow(ab(), kB, 1));
    cb.free_reduce();
    expect_fact(cb.fact(cb.last()), gpow(ab(), kB, 1), empty_word(), "expected b > 1");
    return cb.finish();
}

Certificate family1_certificate(const Family1& f)
{
    const int w = f.w, k = f.k, m = f.m;
    RawBuilder rb;
    auto c0 = [&] {
        for (int i = 0; i < k; ++i) {
            rb.put(kA, 1);
            rb.put(kB, 1);
        }
        rb.put(kA, 1, true);
        for (int i = 0; i < k; ++i) {
            rb.put(kB, -1);
            rb.put(kA, -1);
        }
        rb.put(kB, -1);
    };
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < k; ++i) {
            rb.put(kB, 1);
            rb.put(kA, 1, true);
        }
        rb.pow(kB, w - 2 * k);
        for (int i = 0; i < w - k; ++i)
            c0();
    }
    c0();

    CertificateBuilder cb;
    cb.relator_equality(empty_word(), rb.word());
    for (auto it = rb.marks.rbegin(); it != rb.marks.rend(); ++it)
        cb.delete_alpha(Side::Rhs, *it);
    return finish_from_beta_inverse(cb);
}

Certificate family23_certificate(const FamilyParams& f)
{
    const UnifiedPresentation u = unified_presentation(f);
    const int n = u.n, k = u.k, b = u.b, m = u.m;
    RawBuilder rb;
    // copies of C1 C2; the first `both` get an A before C1 and C2, the rest before C2 only.
    auto c1c2_block = [&](int copies, int both) {
        for (int i = 0; i < copies; ++i) {
            if (i < both)
                rb.mark_here();
            rb.put(kA, 1);
            rb.pow(kB, n - k + 1);
            rb.mark_here();
            rb.put(kA, 1);
            rb.pow(kB, k - n);
        }
    };
    c1c2_block(n - k + b - 1, n - k);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < b - 1; ++i) {
            rb.put(kB, -1);
            rb.put(kA, -1);
        }
        rb.pow(kB, k - n - 1);
        c1c2_block(n - k + b, n - k + 1);
    }

    RawBuilder lhs;
    lhs.pow(kB, n - k + 1);
    for (int i = 0; i < b - 1; ++i) {
        lhs.put(kA, 1);
        lhs.put(kB, 1);
    }

    CertificateBuilder cb;
    cb.relator_equality(lhs.word(), rb.word());
    for (auto it = rb.marks.rbegin(); it != rb.marks.rend(); ++it)
        cb.insert_alpha_inverse(Side::Rhs, *it);
    cb.free_reduce();
    RawBuilder target;
    target.pow(kB, n - k);
    for (int i = 0; i < b - 1; ++i) {
        target.put(kA, 1);
        target.put(kB, 1);
    }
    expect_fact(cb.fact(cb.last()), reduce(lhs.word()), reduce(target.word()), "unified deletion stage");
    RawBuilder tail;
    for (int i = 0; i < b - 1; ++i) {
        tail.put(kB, -1);
        tail.put(kA, -1);
    }
    tail.pow(kB, k - n);
    cb.append(tail.word());
    cb.free_reduce();
    expect_fact(cb.fact(cb.last()), gpow(ab(), kB, 1), empty_word(), "expected b > 1");
    return cb.finish();
}

bool is_conclusion(const IneqFact& f)
{
    return f.lhs == gpow(ab(), kB, 1) && f.rhs.empty() &&
           (f.relation == Relation::Greater || f.relation == Relation::GreaterEqual);
}

} // namespace

bool operator==(const IneqFact& x, const IneqFact& y)
{
    return x.relation == y.relation && x.lhs == y.lhs && x.rhs == y.rhs;
}

CriterionReport criterion_check(const KnotGroupPresentation& pres)
{
    CriterionReport r;
    r.meridian_is_generator = pres.meridian == gpow(pres.meridian.alphabet(), kA, 1);
    const std::array<int, 2> gens{kA, kB};
    r.s_positive = is_positive(pres.surface_framing, gens);
    r.s_has_alpha = count_letter(pres.surface_framing, kA, 1) > 0;
    r.v_claimed_positive = pres.claimed_framing > 0;
    const AbelianizationReport ab = abelianize(pres);
    if (ab.h1_is_Z && ab.v_star)
        r.v_audited_positive = *ab.v_star > 0;
    return r;
}

Certificate derive_beta_monotone(const KnotGroupPresentation& pres)
{
    if (!pres.family)
        return search_beta_monotone(pres);
    return std::visit(Overloaded{
                          [](const Family1& f) { return family1_certificate(f); },
                          [&](const auto&) { return family23_certificate(*pres.family); },
                      },
                      *pres.family);
}

Certificate search_beta_monotone(const KnotGroupPresentation& pres, const SearchLimits& limits)
{
    if (pres.relator.alphabet()->size() != 2)
        throw InvalidParameters("search expects a presentation over a, b");
    struct Node {
        GroupWord word;
        std::ptrdiff_t parent;
        Rule rule;
        std::size_t position;
        std::size_t depth;
    };
    std::vector<Node> nodes;
    std::set<std::vector<std::pair<int, int>>> seen;
    auto key = [](const GroupWord& w) {
        std::vector<std::pair<int, int>> k;
        for (const auto& l : w.letters())
            k.emplace_back(l.gen, l.sign);
        return k;
    };
    const GroupWord target = gpow(ab(), kB, -1);
    std::deque<std::size_t> queue;
    for (const GroupWord& base : {pres.relator, invert(pres.relator)}) {
        for (std::size_t s = 0; s < base.size(); ++s) {
            GroupWord w = rotate(base, s);
            if (seen.insert(key(w)).second) {
                nodes.push_back({w, -1, Rule::RelatorEquality, 0, 0});
                queue.push_back(nodes.size() - 1);
            }
        }
    }
    std::optional<std::size_t> found;
    while (!queue.empty() && !found) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        if (nodes[cur].depth >= limits.max_depth)
            continue;
        const GroupWord w = nodes[cur].word;
        std::vector<std::pair<Rule, std::size_t>> moves;
        for (std::size_t p = 0; p < w.size(); ++p)
            if (w[p] == Letter{kA, 1})
                moves.emplace_back(Rule::DeleteAlpha, p);
        for (std::size_t p = 0; p <= w.size(); ++p)
            moves.emplace_back(Rule::InsertAlphaInverse, p);
        for (const auto& [rule, p] : moves) {
            GroupWord next = rule == Rule::DeleteAlpha ? erase_letter(w, p) : insert_letter(w, p, {kA, -1});
            if (!seen.insert(key(next)).second)
                continue;
            nodes.push_back({next, static_cast<std::ptrdiff_t>(cur), rule, p, nodes[cur].depth + 1});
            if (cyclic_reduce(next) == target) {
                found = nodes.size() - 1;
                break;
            }
            if (nodes.size() >= limits.max_states)
                throw DerivationError("search exhausted its state budget");
            queue.push_back(nodes.size() - 1);
        }
    }
    if (!found)
        throw DerivationError("no certificate within the depth bound");

    std::vector<std::size_t> path;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(*found); i >= 0; i = nodes[static_cast<std::size_t>(i)].parent)
        path.push_back(static_cast<std::size_t>(i));
    CertificateBuilder cb;
    cb.relator_equality(empty_word(), nodes[path.back()].word);
    for (auto it = path.rbegin() + 1; it != path.rend(); ++it) {
        const Node& nd = nodes[*it];
        if (nd.rule == Rule::DeleteAlpha)
            cb.delete_alpha(Side::Rhs, nd.position);
        else
            cb.insert_alpha_inverse(Side::Rhs, nd.position);
    }
    return finish_from_beta_inverse(cb);
}

namespace {

/// Recomputes the fact step `i` must produce; throws Error with the reason.
void check_step(const Certificate& cert, std::size_t i, const KnotGroupPresentation& pres)
{
    const DerivationStep& s = cert.steps[i];
    auto need_inputs = [&](std::size_t n) {
        if (s.inputs.size() != n)
            throw Error("expected " + std::to_string(n) + " input(s)");
        for (std::size_t in : s.inputs)
            if (in >= i)
                throw Error("input " + std::to_string(in) + " does not precede the step");
    };
    auto input = [&](std::size_t j) -> const IneqFact& { return cert.steps[s.inputs[j]].result; };
    auto require_result = [&](const IneqFact& expected) {
        if (!(s.result == expected))
            throw Error("stored result differs from the recomputed fact");
    };

    switch (s.rule) {
    case Rule::Hypothesis:
        need_inputs(0);
        require_result({gpow(ab(), kA, 1), Relation::Greater, empty_word()});
        return;
    case Rule::RelatorEquality:
        need_inputs(0);
        if (s.result.relation != Relation::Equal)
            throw Error("relator equality must be an equality");
        if (!is_relator_rotation(concat(s.result.lhs, invert(s.result.rhs)), pres.relator))
            throw Error("u v^-1 is not a cyclic shift of the relator or its inverse");
        return;
    case Rule::DeleteAlpha:
    case Rule::InsertAlphaInverse: {
        need_inputs(1);
        IneqFact r = input(0);
        GroupWord& w = s.side == Side::Rhs ? r.rhs : r.lhs;
        const bool del = s.rule == Rule::DeleteAlpha;
        const Letter l{kA, (s.side == Side::Rhs) == del ? 1 : -1};
        if (del) {
            if (s.position >= w.size() || !(w[s.position] == l))
                throw Error("no deletable letter at position " + std::to_string(s.position));
            w = erase_letter(w, s.position);
        } else {
            if (s.position > w.size())
                throw Error("insert position out of range");
            w = insert_letter(w, s.position, l);
        }
        r.relation = Relation::Greater;
        require_result(r);
        return;
    }
    case Rule::Compose:
        need_inputs(2);
        require_result({raw_concat(input(0).lhs, input(1).lhs), compose_relation(input(0).relation, input(1).relation),
                        raw_concat(input(0).rhs, input(1).rhs)});
        return;
    case Rule::PrependWord:
        need_inputs(1);
        require_result({raw_concat(s.word, input(0).lhs), input(0).relation, raw_concat(s.word, input(0).rhs)});
        return;
    case Rule::AppendWord:
        need_inputs(1);
        require_result({raw_concat(input(0).lhs, s.word), input(0).relation, raw_concat(input(0).rhs, s.word)});
        return;
    case Rule::FreeReduce:
        need_inputs(1);
        if (s.result.relation != input(0).relation || !free_equal(s.result.lhs, input(0).lhs) ||
            !free_equal(s.result.rhs, input(0).rhs))
            throw Error("free reduction changed a group element or the relation");
        return;
    case Rule::Weaken:
        need_inputs(1);
        if (input(0).relation == Relation::GreaterEqual)
            throw Error("nothing to weaken");
        require_result({input(0).lhs, Relation::GreaterEqual, input(0).rhs});
        return;
    }
    throw Error("unknown rule");
}

} // namespace

VerificationResult verify_certificate(const Certificate& cert, const KnotGroupPresentation& pres)
{
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        try {
            check_step(cert, i, pres);
        } catch (const std::exception& e) {
            return {false, i, "step " + std::to_string(i) + " (" + to_string(cert.steps[i].rule) + "): " + e.what()};
        }
    }
    const std::size_t n = cert.steps.size();
    try {
        if (cert.steps.empty() || !(cert.conclusion == cert.steps.back().result))
            return {false, n, "conclusion is not the last derived fact"};
        if (!is_conclusion(cert.conclusion))
            return {false, n, "conclusion is not b > 1 or b >= 1"};
    } catch (const std::exception& e) {
        return {false, n, std::string("conclusion: ") + e.what()};
    }
    return {true, std::nullopt, ""};
}

std::int64_t genus_positive_braid(const OneBridgeParams& p)
{
    const BraidWord w = one_bridge_word(p);
    if (!is_knot(w))
        throw InvalidParameters("braid closure is not a knot");
    if (!is_positive(w))
        throw InvalidParameters("braid is not positive");
    const std::int64_t twice = exponent_sum(w) - w.strands() + 1;
    if (twice % 2 != 0)
        throw ArithmeticError("exponent sum - strands + 1 is odd for a knot braid");
    return twice / 2;
}

std::int64_t theorem_slope_bound(const FamilyParams& f)
{
    validate(f);
    return std::visit(Overloaded{
                          [](const Family1& v) -> std::int64_t { return v.w + 2 * v.k - 1; },
                          [](const Family2& v) -> std::int64_t {
                              const std::int64_t n = v.n;
                              return 2 * n * (2 * n - 1 + v.m * (2 * n + 1)) + 2 * v.k;
                          },
                          [](const Family3& v) -> std::int64_t {
                              const std::int64_t n = v.n;
                              return (2 * n - 1) * (2 * n - 2 + 2 * v.m * n) + 2 * v.k - 1;
                          },
                      },
                      f);
}

SlopeBound surgery_threshold(const KnotGroupPresentation& pres, const OneBridgeParams& p, FramingPolicy policy)
{
    const CriterionReport c = criterion_check(pres);
    const bool v_ok = policy == FramingPolicy::Claimed ? c.v_claimed_positive : c.v_audited_positive.value_or(false);
    if (!c.meridian_is_generator || !c.s_positive || !c.s_has_alpha || !v_ok)
        throw DerivationError("criterion fails under the " + to_string(policy) + " framing");
    SlopeBound out;
    out.family = pres.family;
    out.policy = policy;
    out.criterion_bound = policy == FramingPolicy::Claimed ? pres.claimed_framing : *abelianize(pres).v_star;
    out.lspace_bound = 2 * genus_positive_braid(p) - 1;
    if (pres.family)
        out.theorem_bound = theorem_slope_bound(*pres.family);
    return out;
}

namespace {

constexpr std::array<std::pair<Relation, std::string_view>, 3> kRelations{{
    {Relation::Greater, ">"},
    {Relation::GreaterEqual, ">="},
    {Relation::Equal, "="},
}};

constexpr std::array<std::pair<Rule, std::string_view>, 9> kRules{{
    {Rule::Hypothesis, "Hypothesis"},
    {Rule::RelatorEquality, "RelatorEquality"},
    {Rule::DeleteAlpha, "DeleteAlpha"},
    {Rule::InsertAlphaInverse, "InsertAlphaInverse"},
    {Rule::Compose, "Compose"},
    {Rule::PrependWord, "PrependWord"},
    {Rule::AppendWord, "AppendWord"},
    {Rule::FreeReduce, "FreeReduce"},
    {Rule::Weaken, "Weaken"},
}};

constexpr std::array<std::pair<FramingPolicy, std::string_view>, 2> kPolicies{{
    {FramingPolicy::Claimed, "claimed"},
    {FramingPolicy::Audited, "audited"},
}};

template <class E, std::size_t N>
std::string name_of(const std::array<std::pair<E, std::string_view>, N>& table, E e)
{
    for (const auto& [v, n] : table)
        if (v == e)
            return std::string(n);
    return "?";
}

template <class E, std::size_t N>
std::optional<E> value_of(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view s)
{
    for (const auto& [v, n] : table)
        if (n == s)
            return v;
    return std::nullopt;
}

} // namespace

std::string to_string(Relation r) { return name_of(kRelations, r); }
std::string to_string(Rule r) { return name_of(kRules, r); }
std::string to_string(FramingPolicy p) { return name_of(kPolicies, p); }
std::optional<Relation> parse_relation(std::string_view s) { return value_of(kRelations, s); }
std::optional<Rule> parse_rule(std::string_view s) { return value_of(kRules, s); }
std::optional<FramingPolicy> parse_policy(std::string_view s) { return value_of(kPolicies, s); }

} // namespace onebridge
