#include "mini_checker.hpp"

#include <algorithm>
#include <utility>

namespace minicheck {
namespace {
using Str = std::string;
Str squash(Str s) { return s.erase(std::remove(s.begin(), s.end(), ' '), s.end()), s; }
char flip(char c) { return static_cast<char>(c ^ 0x20); } // ASCII case toggle
Str red(const Str& s)
{
    Str o;
    for (char c : s)
        o.empty() || o.back() != flip(c) ? (void)o.push_back(c) : o.pop_back();
    return o;
}
Str inv(const Str& s)
{
    Str o(s.rbegin(), s.rend());
    std::transform(o.begin(), o.end(), o.begin(), flip);
    return o;
}
Str cyc(Str s)
{
    for (s = red(s); s.size() >= 2 && s.front() == flip(s.back());)
        s = s.substr(1, s.size() - 2);
    return s;
}
bool rotation_of(const Str& u, const Str& r) { return !u.empty() && u.size() == r.size() && (r + r).find(u) != Str::npos; }

struct Fact {
    Str l, rel, r;
    bool operator==(const Fact&) const = default;
};
Fact fact(const nlohmann::json& j) { return {squash(j.at("lhs")), j.at("relation"), squash(j.at("rhs"))}; }
} // namespace

std::string check(const nlohmann::json& cert, const std::string& relator_text)
{
    const Str rel = cyc(squash(relator_text));
    std::vector<Fact> facts;
    const auto& steps = cert.at("steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        const Str rule = s.at("rule"), at = "step " + std::to_string(i) + ": ";
        const Fact got = fact(s.at("result"));
        std::vector<Fact> in;
        for (std::size_t k : s.at("inputs").get<std::vector<std::size_t>>())
            if (k >= i)
                return at + "input out of order";
            else
                in.push_back(facts[k]);
        const std::size_t need = rule == "Compose" ? 2 : (rule == "Hypothesis" || rule == "RelatorEquality") ? 0 : 1;
        if (in.size() != need)
            return at + "wrong input count";
        Fact want = need ? in[0] : got;
        bool ok = true;
        if (rule == "Hypothesis") {
            want = {"a", ">", ""};
        } else if (rule == "RelatorEquality") {
            const Str c = cyc(got.l + inv(got.r));
            ok = got.rel == "=" && (rotation_of(c, rel) || rotation_of(c, inv(rel)));
        } else if (rule == "DeleteAlpha" || rule == "InsertAlphaInverse") {
            const bool rhs = s.at("side") == "rhs", del = rule == "DeleteAlpha";
            const std::size_t p = s.at("position");
            Str& w = rhs ? want.r : want.l;
            const char c = rhs == del ? 'a' : 'A';
            if (del ? (p >= w.size() || w[p] != c) : p > w.size())
                return at + "bad position";
            del ? (void)w.erase(p, 1) : (void)w.insert(p, 1, c);
            want.rel = ">";
        } else if (rule == "Compose") {
            const Str &a = in[0].rel, &b = in[1].rel;
            want = {in[0].l + in[1].l, a == ">" || b == ">" ? ">" : (a == "=" && b == "=" ? "=" : ">="), in[0].r + in[1].r};
        } else if (rule == "PrependWord" || rule == "AppendWord") {
            const Str w = squash(s.at("word"));
            const bool pre = rule == "PrependWord";
            want = {pre ? w + want.l : want.l + w, want.rel, pre ? w + want.r : want.r + w};
        } else if (rule == "FreeReduce") {
            ok = red(got.l) == red(want.l) && red(got.r) == red(want.r) && got.rel == want.rel;
            want = got;
        } else if (rule == "Weaken") {
            ok = std::exchange(want.rel, ">=") != ">=";
        } else {
            return at + "unknown rule " + rule;
        }
        if (!ok || !(want == got))
            return at + rule + " not justified";
        facts.push_back(got);
    }
    const Fact end = fact(cert.at("conclusion"));
    if (facts.empty() || !(facts.back() == end) || end.l != "b" || !end.r.empty() || end.rel == "=")
        return "conclusion is not b > 1";
    return "";
}

} // namespace minicheck
