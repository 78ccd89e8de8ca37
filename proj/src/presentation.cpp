#include "onebridge/presentation.hpp"

#include "onebridge/error.hpp"
#include "detail.hpp"

namespace onebridge {

using detail::gpow;
using detail::Overloaded;

namespace {

constexpr int kA = 0;
constexpr int kB = 1;
constexpr int kG = 2;
constexpr int kD = 3;

/// Word builders over a fixed alphabet; `x(e)` is generator x to the e.
struct Words {
    AlphabetPtr alphabet;
    GroupWord a(std::int64_t e = 1) const { return gpow(alphabet, kA, e); }
    GroupWord b(std::int64_t e = 1) const { return gpow(alphabet, kB, e); }
    GroupWord g(std::int64_t e = 1) const { return gpow(alphabet, kG, e); }
    GroupWord d(std::int64_t e = 1) const { return gpow(alphabet, kD, e); }
    GroupWord ab(std::int64_t e) const { return power(a() * b(), e); }
    GroupWord ba(std::int64_t e) const { return power(b() * a(), e); }
    GroupWord one() const { return GroupWord(alphabet); }
};

const Words& ab_words()
{
    static const Words w{alphabet_ab()};
    return w;
}

const Words& abgd_words()
{
    static const Words w{alphabet_abgd()};
    return w;
}

/// Restricts a word over {a, b, g, d} that only uses a, b to the alphabet {a, b}.
GroupWord to_ab(const GroupWord& w)
{
    std::vector<Letter> letters;
    for (const auto& l : w.letters()) {
        if (l.gen != kA && l.gen != kB)
            throw DerivationError("elimination left '" + to_string(w) + "' with gamma or delta letters");
        letters.push_back(l);
    }
    return GroupWord(alphabet_ab(), std::move(letters));
}

/// Family 1's braces body (ba)^k b^(w-2k) [(ba)^k b a^-1 (ab)^-k]^(k-w).
template <class W>
GroupWord family1_braces(const W& x, int w, int k)
{
    const GroupWord y = x.ba(k) * x.b() * x.a(-1) * x.ab(-k);
    return x.ba(k) * x.b(w - 2 * k) * power(y, k - w);
}

/// (C1 C2)^c (ab)^(-e) b^(k-n-1): the inner body of the family 2/3 relation.
template <class W>
GroupWord family23_body(const W& x, int n, int k, int c, int e)
{
    const GroupWord c1c2 = x.a() * x.b(n - k + 1) * x.a() * x.b(k - n);
    return power(c1c2, c) * x.ab(-e) * x.b(k - n - 1);
}

} // namespace

KnotGroupPresentation make_presentation(GroupWord lhs, GroupWord rhs, GroupWord meridian, GroupWord surface_framing,
                                        std::int64_t claimed_framing, std::optional<FamilyParams> family)
{
    KnotGroupPresentation p{reduce(lhs), reduce(rhs), GroupWord(lhs.alphabet()), reduce(meridian), reduce(surface_framing),
                            std::nullopt, claimed_framing, std::move(family)};
    require_same_alphabet(p.relation_lhs, p.relation_rhs);
    p.relator = cyclic_reduce(p.relation_rhs * invert(p.relation_lhs));
    if (p.relator.empty())
        throw InvalidParameters("relation is trivial in the free group");
    return p;
}

KnotGroupPresentation family1_presentation(int w, int k, int m)
{
    const FamilyParams f = Family1{w, k, m};
    validate(f);
    const Words& x = ab_words();
    GroupWord lhs = x.ba(k) * x.b();
    GroupWord rhs = power(family1_braces(x, w, k), m) * x.ab(k) * x.a();
    GroupWord s = x.a() * x.ba(k) * x.b(w - 2 * k) * x.ab(k);
    return make_presentation(std::move(lhs), std::move(rhs), x.a(), std::move(s), claimed_surface_framing(to_one_bridge(f)), f);
}

KnotGroupPresentation family2_presentation(int n, int k, int m)
{
    const FamilyParams f = Family2{n, k, m};
    validate(f);
    const Words& x = ab_words();
    GroupWord lhs = power(family23_body(x, n, k, n + k, 2 * k - 1), m + 1);
    GroupWord rhs = x.a() * x.b(n - k + 1) * x.a() * x.b(k - n);
    GroupWord s = x.a() * x.b(n - k + 1) * x.ab(2 * k - 1) * x.a() * x.b(n - k + 1);
    return make_presentation(std::move(lhs), std::move(rhs), x.a(), std::move(s), claimed_surface_framing(to_one_bridge(f)), f);
}

KnotGroupPresentation family3_presentation(int n, int k, int m)
{
    const FamilyParams f = Family3{n, k, m};
    validate(f);
    const Words& x = ab_words();
    GroupWord lhs = power(family23_body(x, n, k, n + k - 1, 2 * k - 2), m + 1);
    GroupWord rhs = x.a() * x.b(n - k + 1) * x.a() * x.b(k - n);
    // Form reached by the elimination; the alternate below is a cyclic conjugate.
    GroupWord s = x.a() * x.b(n - k + 1) * x.ab(2 * k - 2) * x.a() * x.b(n - k + 1);
    auto p = make_presentation(std::move(lhs), std::move(rhs), x.a(), std::move(s), claimed_surface_framing(to_one_bridge(f)), f);
    p.surface_framing_alternate = x.b(n - k + 1) * x.ab(2 * k - 2) * x.a() * x.b(n - k + 1) * x.a();
    return p;
}

KnotGroupPresentation presentation_for(const FamilyParams& f)
{
    return std::visit(Overloaded{
                          [](const Family1& v) { return family1_presentation(v.w, v.k, v.m); },
                          [](const Family2& v) { return family2_presentation(v.n, v.k, v.m); },
                          [](const Family3& v) { return family3_presentation(v.n, v.k, v.m); },
                      },
                      f);
}

UnifiedPresentation unified_presentation(const FamilyParams& f)
{
    validate(f);
    UnifiedPresentation u{GroupWord(alphabet_ab()), GroupWord(alphabet_ab()), GroupWord(alphabet_ab())};
    std::visit(Overloaded{
                   [](const Family1&) -> void { throw InvalidParameters("family 1 has no unified form"); },
                   [&](const Family2& v) {
                       u.n = v.n;
                       u.k = v.k;
                       u.m = v.m;
                       u.b = 2 * v.k;
                   },
                   [&](const Family3& v) {
                       u.n = v.n;
                       u.k = v.k;
                       u.m = v.m;
                       u.b = 2 * v.k - 1;
                   },
               },
               f);
    const Words& x = ab_words();
    u.c1 = x.a() * x.b(u.n - u.k + 1);
    u.c2 = x.a() * x.b(u.k - u.n);
    const GroupWord c1c2 = u.c1 * u.c2;
    const GroupWord body = power(c1c2, u.n - u.k + u.b) * x.ab(1 - u.b) * x.b(u.k - u.n - 1);
    u.relator = power(body, u.m + 1) * invert(c1c2);
    return u;
}

SvkData svk_relations(const FamilyParams& f)
{
    validate(f);
    const Words& x = abgd_words();
    return std::visit(
        Overloaded{
            [&](const Family1& v) {
                const int w = v.w, k = v.k, m = v.m;
                const GroupWord y = x.ba(k) * x.b() * x.a(-1) * x.ab(-k);
                SvkData d{f,
                          {LoopRelation{x.a() * x.ba(k) * x.b(w - 2 * k) * x.a(-1), x.g(static_cast<std::int64_t>(m) * (w - k) + 1)},
                           LoopRelation{x.a() * x.ba(k) * x.b() * x.a(-1), x.g(static_cast<std::int64_t>(m) * (k + 1)) * x.d()},
                           LoopRelation{x.a() * x.ab(k), x.g(static_cast<std::int64_t>(m) * k) * x.d()}},
                          EliminationScript{1, 2, m, w - k, 1, 2, true, k},
                          to_ab(x.a() * x.ba(k) * x.b() * x.a(-1) * x.ab(-k) * x.a(-1)),
                          to_ab(x.a() * x.ba(k) * x.b(w - 2 * k) * power(y, k - w) * x.a(-1)),
                          to_ab(x.a() * power(y, -k) * x.ab(k)),
                          x.g(1 + static_cast<std::int64_t>(m) * w) * x.d()};
                return d;
            },
            [&](const auto& v) {
                // Families 2 and 3 differ only in the green loop and the
                // exponents of the gamma expression.
                const bool fam2 = std::is_same_v<std::decay_t<decltype(v)>, Family2>;
                const int n = v.n, k = v.k, m = v.m;
                const std::int64_t p = m + 1;
                const int c = fam2 ? n + k : n + k - 1;
                const int e = fam2 ? 2 * k - 1 : 2 * k - 2;
                const GroupWord body = family23_body(x, n, k, c, e);
                const std::int64_t delta_exp = p * (n - k) - 1;
                const std::int64_t twist = fam2 ? 2 * n - 1 + static_cast<std::int64_t>(m) * (2 * n + 1)
                                                : 2 * n - 2 + 2 * static_cast<std::int64_t>(m) * n;
                SvkData d{f,
                          {LoopRelation{x.a() * x.b(n - k + 1) * x.ab(e) * x.a(-1), x.g(p * c - 1)},
                           LoopRelation{x.a() * x.b(n - k) * x.a(-1), x.g(delta_exp) * x.d()},
                           LoopRelation{x.a(2) * x.b(n - k + 1), x.g(p * (n - k + 1) - 1) * x.d()}},
                          EliminationScript{2, 1, p, c, -1, 1, false, delta_exp},
                          to_ab(x.a(2) * x.b(n - k + 1) * x.a() * x.b(k - n) * x.a(-1)),
                          to_ab(x.a() * body * x.a(-1)),
                          to_ab(x.a() * power(body, -delta_exp) * x.b(n - k) * x.a(-1)),
                          x.g(twist) * x.d()};
                return d;
            },
        },
        f);
}

Elimination eliminate(const SvkData& d)
{
    const Words& x = abgd_words();
    const auto& s = d.script;
    const auto& L = d.loops;
    auto expect = [](const GroupWord& got, const GroupWord& want, const char* what) {
        if (!(reduce(got) == reduce(want)))
            throw DerivationError(std::string(what) + ": expected '" + to_string(reduce(want)) + "', got '" +
                                  to_string(reduce(got)) + "'");
    };

    // g^p from two loops sharing the same delta.
    expect(L[s.power_from].handlebody_v * invert(L[s.power_over].handlebody_v), x.g(s.gamma_power),
           "isolating the gamma power");
    const GroupWord power_expr = L[s.power_from].handlebody_u * invert(L[s.power_over].handlebody_u);

    // g from the green loop.
    GroupWord gamma_expr(x.alphabet);
    if (s.gamma_sign > 0) {
        expect(L[0].handlebody_v * power(x.g(s.gamma_power), -s.gamma_multiplier), x.g(), "isolating gamma");
        gamma_expr = L[0].handlebody_u * power(power_expr, -s.gamma_multiplier);
    } else {
        expect(power(x.g(s.gamma_power), s.gamma_multiplier) * invert(L[0].handlebody_v), x.g(), "isolating gamma");
        gamma_expr = power(power_expr, s.gamma_multiplier) * invert(L[0].handlebody_u);
    }

    // d from one of the loops containing it.
    GroupWord delta_expr(x.alphabet);
    const auto& dl = L[s.delta_from];
    if (s.delta_via_power) {
        expect(power(x.g(s.gamma_power), -s.delta_exponent) * dl.handlebody_v, x.d(), "isolating delta");
        delta_expr = power(power_expr, -s.delta_exponent) * dl.handlebody_u;
    } else {
        expect(x.g(-s.delta_exponent) * dl.handlebody_v, x.d(), "isolating delta");
        delta_expr = power(gamma_expr, -s.delta_exponent) * dl.handlebody_u;
    }

    Elimination out{to_ab(power_expr), to_ab(gamma_expr), to_ab(delta_expr), GroupWord(alphabet_ab())};
    if (!free_equal(out.power_expression, d.power_expression))
        throw DerivationError("derived gamma-power expression differs from the stated one");
    if (!free_equal(out.gamma_expression, d.gamma_expression))
        throw DerivationError("derived gamma expression differs from the stated one");
    if (!free_equal(out.delta_expression, d.delta_expression))
        throw DerivationError("derived delta expression differs from the stated one");

    // The surviving relation: (g)^p = (g^p expression) after substituting g.
    out.relator = cyclic_reduce(power(out.gamma_expression, s.gamma_power) * invert(out.power_expression));
    if (out.relator.empty())
        throw DerivationError("elimination produced a trivial relator");

    // Every loop relation must abelianize into the span of the relator.
    const std::map<int, GroupWord> sub{{kA, ab_words().a()}, {kB, ab_words().b()}, {kG, out.gamma_expression}, {kD, out.delta_expression}};
    const ExponentVector rv = exponent_vector(out.relator);
    for (const auto& loop : L) {
        const ExponentVector lv = exponent_vector(to_ab(loop.handlebody_u) * invert(substitute(loop.handlebody_v, sub)));
        const std::int64_t cross = lv[0] * rv[1] - lv[1] * rv[0];
        if (cross != 0)
            throw DerivationError("a loop relation is not a consequence of the derived relator in homology");
    }
    return out;
}

GroupWord derive_relator(const SvkData& d)
{
    return eliminate(d).relator;
}

namespace {

GroupWord relator_power(const KnotGroupPresentation& pres, RelatorDirection dir)
{
    return dir == RelatorDirection::Forward ? pres.relator : invert(pres.relator);
}

} // namespace

GroupWord insert_relator(const GroupWord& w, const KnotGroupPresentation& pres, const RewriteStep& step)
{
    if (step.position > w.size())
        throw InvalidParameters("rewrite position past the end of the word");
    GroupWord out = w.subword(0, step.position);
    out.append_raw(step.conjugator);
    out.append_raw(relator_power(pres, step.direction));
    out.append_raw(invert(step.conjugator));
    out.append_raw(w.subword(step.position, w.size() - step.position));
    return reduce(out);
}

GroupWord apply_relator(const GroupWord& w, const KnotGroupPresentation& pres, std::size_t position, RelatorDirection direction)
{
    const GroupWord& from = direction == RelatorDirection::Forward ? pres.relation_lhs : pres.relation_rhs;
    const GroupWord& to = direction == RelatorDirection::Forward ? pres.relation_rhs : pres.relation_lhs;
    if (position > w.size() || from.size() > w.size() - position || !(w.subword(position, from.size()) == from))
        throw InvalidParameters("relation side does not occur at position " + std::to_string(position));
    GroupWord out = w.subword(0, position);
    out.append_raw(to);
    out.append_raw(w.subword(position + from.size(), w.size() - position - from.size()));
    return reduce(out);
}

GroupWord replay_rewrites(GroupWord w, const KnotGroupPresentation& pres, const std::vector<RewriteStep>& steps)
{
    for (const auto& s : steps)
        w = insert_relator(w, pres, s);
    return w;
}

namespace {

/// Symbolic product of gamma-expression powers, gamma-power-expression
/// powers and literal words; used to plan the s-simplification.
struct Block {
    enum Kind { Gamma, Power, Literal } kind;
    std::int64_t exponent = 1;
    GroupWord literal{alphabet_ab()};
};

class FramingPlanner {
public:
    FramingPlanner(const KnotGroupPresentation& pres, const Elimination& elim, std::int64_t gamma_power)
        : pres_(pres), elim_(elim), p_(gamma_power)
    {
        // Gamma^p * (g^p expression)^-1 is a conjugate e x^-1 r^sigma x e^-1 of r^sigma.
        const GroupWord derived = reduce(power(elim.gamma_expression, p_) * invert(elim.power_expression));
        const CyclicSplit split = cyclic_split(derived);
        for (RelatorDirection dir : {RelatorDirection::Forward, RelatorDirection::Backward}) {
            const GroupWord r = relator_power(pres, dir);
            const std::ptrdiff_t s = rotation_offset(split.core, r);
            if (s >= 0) {
                base_direction_ = dir;
                base_conjugator_ = split.conjugator * invert(r.subword(0, static_cast<std::size_t>(s)));
                return;
            }
        }
        throw DerivationError("derived relator is not conjugate to the presentation relator");
    }

    GroupWord expand(const std::vector<Block>& blocks, std::size_t count) const
    {
        GroupWord out(alphabet_ab());
        for (std::size_t i = 0; i < count; ++i) {
            const auto& bl = blocks[i];
            switch (bl.kind) {
            case Block::Gamma: out.append_raw(power(elim_.gamma_expression, bl.exponent)); break;
            case Block::Power: out.append_raw(power(elim_.power_expression, bl.exponent)); break;
            case Block::Literal: out.append_raw(power(bl.literal, bl.exponent)); break;
            }
        }
        return out;
    }

    /// Step that multiplies the current word on the left by
    /// Q (Gamma^p G^-1)^-1 Q^-1, positioned against `current`.
    RewriteStep step_for(const GroupWord& q, const GroupWord& current) const
    {
        const GroupWord conj = reduce(q) * base_conjugator_;
        std::size_t common = 0;
        while (common < conj.size() && common < current.size() && conj[common] == current[common])
            ++common;
        const RelatorDirection dir =
            base_direction_ == RelatorDirection::Forward ? RelatorDirection::Backward : RelatorDirection::Forward;
        return RewriteStep{common, dir, conj.subword(common, conj.size() - common)};
    }

    /// Rewrites each listed block (Gamma^p -> G, or G^-1 -> Gamma^-p) in order.
    std::vector<RewriteStep> plan(std::vector<Block> blocks, const std::vector<std::size_t>& targets, GroupWord current) const
    {
        std::vector<RewriteStep> steps;
        for (std::size_t idx : targets) {
            Block& bl = blocks[idx];
            GroupWord q = expand(blocks, idx);
            if (bl.kind == Block::Gamma && bl.exponent == p_) {
                bl = Block{Block::Power, 1};
            } else if (bl.kind == Block::Power && bl.exponent == -1) {
                q.append_raw(power(elim_.gamma_expression, -p_));
                bl = Block{Block::Gamma, -p_};
            } else {
                throw DerivationError("planner asked to rewrite a block it has no rule for");
            }
            steps.push_back(step_for(q, current));
            current = insert_relator(current, pres_, steps.back());
            if (!free_equal(current, expand(blocks, blocks.size())))
                throw DerivationError("rewrite step diverged from the block plan");
        }
        return steps;
    }

private:
    const KnotGroupPresentation& pres_;
    const Elimination& elim_;
    std::int64_t p_;
    RelatorDirection base_direction_ = RelatorDirection::Forward;
    GroupWord base_conjugator_{alphabet_ab()};
};

} // namespace

FramingSimplification framing_simplification(const FamilyParams& f)
{
    const KnotGroupPresentation pres = presentation_for(f);
    const SvkData svk = svk_relations(f);
    const Elimination elim = eliminate(svk);
    const auto& s = svk.script;

    // s as g^(t + m w) d equals the product of the green and olive right sides.
    if (!free_equal(svk.framing_gd, svk.loops[0].handlebody_v * svk.loops[2].handlebody_v))
        throw DerivationError("push-off word is not the product of the green and olive loop images");

    const std::map<int, GroupWord> sub{{kA, ab_words().a()}, {kB, ab_words().b()}, {kG, elim.gamma_expression}, {kD, elim.delta_expression}};
    FramingSimplification out{substitute(svk.framing_gd, sub), {}, GroupWord(alphabet_ab())};

    const GroupWord green = to_ab(svk.loops[0].handlebody_u);
    const GroupWord olive = to_ab(svk.loops[2].handlebody_u);
    const GroupWord purple = to_ab(svk.loops[1].handlebody_u);
    const std::int64_t p = s.gamma_power;

    std::vector<Block> blocks;
    std::vector<std::size_t> targets;
    if (std::holds_alternative<Family1>(f)) {
        const auto& v = std::get<Family1>(f);
        if (p > 0) {
            // Gamma (Gamma^m)^w G^-k olive: each Gamma^m -> G.
            blocks.push_back({Block::Gamma, 1});
            for (int i = 0; i < v.w; ++i) {
                targets.push_back(blocks.size());
                blocks.push_back({Block::Gamma, p});
            }
            blocks.push_back({Block::Power, -v.k});
        } else {
            // green G^-(w-k) G^-k olive: each G^-1 -> Gamma^0.
            blocks.push_back({Block::Literal, 1, green});
            for (int i = 0; i < v.w; ++i) {
                targets.push_back(blocks.size());
                blocks.push_back({Block::Power, -1});
            }
        }
        blocks.push_back({Block::Literal, 1, olive});
    } else {
        // Gamma^-1 (Gamma^p)^(c+1) purple: each Gamma^p -> G.
        blocks.push_back({Block::Gamma, -1});
        for (std::int64_t i = 0; i <= s.gamma_multiplier; ++i) {
            targets.push_back(blocks.size());
            blocks.push_back({Block::Gamma, p});
        }
        blocks.push_back({Block::Literal, 1, purple});
    }

    FramingPlanner planner(pres, elim, p);
    if (!free_equal(planner.expand(blocks, blocks.size()), out.unsimplified))
        throw DerivationError("block plan does not match the substituted push-off");
    out.steps = planner.plan(blocks, targets, out.unsimplified);
    out.result = replay_rewrites(out.unsimplified, pres, out.steps);
    if (!(out.result == reduce(green * olive)))
        throw DerivationError("rewrites did not end at the product of the green and olive handlebody words");
    return out;
}

GroupWord longitude(const KnotGroupPresentation& pres, std::int64_t framing)
{
    return power(pres.meridian, -framing) * pres.surface_framing;
}

} // namespace onebridge
