#include "onebridge/alexander.hpp"

#include "onebridge/error.hpp"

#include <algorithm>

namespace onebridge {

LaurentPoly fox_derivative(const GroupWord& w, int gen, std::int64_t beta_power)
{
    const std::int64_t step[2] = {1, beta_power};
    LaurentPoly out;
    std::int64_t degree = 0;
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || l.gen > 1)
            throw InvalidParameters("Fox derivative expects a word in a, b");
        if (l.sign < 0)
            degree -= step[l.gen];
        if (l.gen == gen)
            out += LaurentPoly::monomial(l.sign, degree);
        if (l.sign > 0)
            degree += step[l.gen];
    }
    return out;
}

LaurentPoly fox_alexander(const KnotGroupPresentation& pres, const AbelianizationReport& report)
{
    if (!report.h1_is_Z || !report.beta_power)
        throw InvalidParameters("Fox calculus here needs H1 = Z with b a power of a");
    const std::int64_t e = *report.beta_power;
    const LaurentPoly da = fox_derivative(pres.relator, 0, e);
    const LaurentPoly db = fox_derivative(pres.relator, 1, e);

    // Fundamental formula: da (t - 1) + db (t^e - 1) = phi(r) - 1 = 0, and
    // deleting either column gives delta (phi(x) - 1) / (t - 1).
    const LaurentPoly tm1 = LaurentPoly::t() - 1;
    if (!(da * tm1 + db * (t_power(e) - 1)).is_zero())
        throw ArithmeticError("Fox derivatives violate the fundamental formula");
    if (e == 0) {
        if (!da.is_zero())
            throw ArithmeticError("da must vanish when b is null-homologous");
    } else {
        const auto q = divide_exact(da * tm1, t_power(e) - 1);
        if (!q || !equal_up_to_units(*q, db))
            throw ArithmeticError("the two Fox columns give different Alexander polynomials");
    }
    if (db.is_zero())
        throw ArithmeticError("Fox derivative vanished; not a knot group presentation");
    return normalize(db);
}

LaurentMatrix burau_generator(int strands, const BraidLetter& letter)
{
    if (strands < 2 || letter.index < 1 || letter.index >= strands)
        throw InvalidParameters("braid generator out of range");
    const auto n = static_cast<std::size_t>(strands - 1);
    LaurentMatrix m = LaurentMatrix::identity(n);
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly ti = t_power(-1);
    const bool inv = letter.sign < 0;
    const auto i = static_cast<std::size_t>(letter.index - 1); // diagonal entry of the block
    m(i, i) = inv ? -ti : -t;
    if (i > 0)
        m(i - 1, i) = inv ? LaurentPoly(1) : t;
    if (i + 1 < n)
        m(i + 1, i) = inv ? ti : LaurentPoly(1);
    return m;
}

LaurentMatrix burau_matrix(const BraidWord& w)
{
    const auto n = static_cast<std::size_t>(w.strands() - 1);
    LaurentMatrix m = LaurentMatrix::identity(n);
    // Right multiplication by a generator only rewrites one column.
    for (const auto& l : w.letters()) {
        const LaurentMatrix g = burau_generator(w.strands(), l);
        const auto c = static_cast<std::size_t>(l.index - 1);
        const std::size_t lo = c > 0 ? c - 1 : c;
        const std::size_t hi = std::min(c + 1, n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            LaurentPoly v;
            for (std::size_t j = lo; j <= hi; ++j)
                if (!g(j, c).is_zero() && !m(r, j).is_zero())
                    v += m(r, j) * g(j, c);
            m(r, c) = std::move(v);
        }
    }
    return m;
}

LaurentPoly burau_alexander(const BraidWord& w)
{
    if (!is_knot(w))
        throw InvalidParameters("braid closure is not a knot");
    const LaurentMatrix rho = burau_matrix(w);
    const LaurentPoly det = determinant(LaurentMatrix::identity(rho.rows()) - rho);
    LaurentPoly norm;
    for (int j = 0; j < w.strands(); ++j)
        norm += t_power(j);
    const auto q = divide_exact(det, norm);
    if (!q)
        throw ArithmeticError("det(I - rho) is not divisible by 1 + t + ... + t^(n-1)");
    return normalize(*q);
}

} // namespace onebridge
