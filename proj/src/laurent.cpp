#include "onebridge/laurent.hpp"

#include "onebridge/error.hpp"

#include <algorithm>
#include <sstream>

namespace onebridge {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticError("Laurent coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticError("Laurent coefficient overflow");
    return r;
}

} // namespace

LaurentPoly::LaurentPoly(std::int64_t constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(std::vector<std::int64_t> coeffs, std::int64_t low_degree)
    : coeffs_(std::move(coeffs)), low_(low_degree)
{
    canonicalize();
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, std::int64_t degree)
{
    return LaurentPoly(std::vector<std::int64_t>{coeff}, degree);
}

LaurentPoly t_power(std::int64_t e)
{
    return LaurentPoly::monomial(1, e);
}

void LaurentPoly::canonicalize()
{
    std::size_t lead_zeros = 0;
    while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0)
        ++lead_zeros;
    if (lead_zeros == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    low_ += static_cast<std::int64_t>(lead_zeros);
    while (coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::int64_t LaurentPoly::coeff(std::int64_t degree) const
{
    if (is_zero() || degree < low_ || degree > high_degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(degree - low_)];
}

std::int64_t LaurentPoly::at_one() const
{
    std::int64_t s = 0;
    for (auto c : coeffs_)
        s = checked_add(s, c);
    return s;
}

LaurentPoly LaurentPoly::reciprocal() const
{
    if (is_zero())
        return *this;
    std::vector<std::int64_t> rev(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(std::move(rev), -high_degree());
}

LaurentPoly LaurentPoly::shifted(std::int64_t j) const
{
    LaurentPoly out = *this;
    if (!out.is_zero())
        out.low_ += j;
    return out;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_)
        c = checked_mul(c, -1);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    const std::int64_t lo = std::min(low_, o.low_);
    const std::int64_t hi = std::max(high_degree(), o.high_degree());
    std::vector<std::int64_t> sum(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        sum[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        auto& s = sum[static_cast<std::size_t>(o.low_ - lo) + i];
        s = checked_add(s, o.coeffs_[i]);
    }
    coeffs_ = std::move(sum);
    low_ = lo;
    canonicalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        low_ = 0;
        return *this;
    }
    std::vector<std::int64_t> prod(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    }
    coeffs_ = std::move(prod);
    low_ += o.low_;
    canonicalize();
    return *this;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero())
        return std::nullopt;
    if (a.is_zero())
        return LaurentPoly{};
    // Long division from the top; both are polynomials after shifting.
    std::vector<std::int64_t> rem = a.coeffs();
    const auto& den = b.coeffs();
    if (rem.size() < den.size())
        return std::nullopt;
    const std::size_t qlen = rem.size() - den.size() + 1;
    std::vector<std::int64_t> quo(qlen, 0);
    for (std::size_t step = qlen; step-- > 0;) {
        const std::int64_t top = rem[step + den.size() - 1];
        if (top == 0)
            continue;
        if (top % den.back() != 0)
            return std::nullopt;
        const std::int64_t q = top / den.back();
        quo[step] = q;
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[step + j] = checked_add(rem[step + j], checked_mul(-q, den[j]));
    }
    if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; }))
        return std::nullopt;
    return LaurentPoly(std::move(quo), a.low_degree() - b.low_degree());
}

LaurentPoly normalize(const LaurentPoly& p)
{
    if (p.is_zero())
        return p;
    LaurentPoly out = p.shifted(-p.low_degree());
    return out.leading() < 0 ? -out : out;
}

bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q)
{
    return normalize(p) == normalize(q);
}

std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t d = p.high_degree(); d >= p.low_degree(); --d) {
        std::int64_t c = p.coeff(d);
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const std::int64_t mag = c < 0 ? -c : c;
        if (d == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << '*';
        os << 't';
        if (d != 1)
            os << '^' << d;
    }
    return os.str();
}

LaurentMatrix::LaurentMatrix(std::size_t n) : n_(n), data_(n * n) {}

LaurentMatrix LaurentMatrix::identity(std::size_t n)
{
    LaurentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const
{
    if (n_ != o.n_)
        throw InvalidParameters("matrix sizes differ");
    LaurentMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const auto& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (!o(k, j).is_zero())
                    out(i, j) += a * o(k, j);
        }
    return out;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const
{
    if (n_ != o.n_)
        throw InvalidParameters("matrix sizes differ");
    LaurentMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= o.data_[i];
    return out;
}

LaurentPoly determinant(const LaurentMatrix& input)
{
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    LaurentMatrix m = input;
    LaurentPoly prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k).is_zero())
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(swap, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                auto q = divide_exact(num, prev);
                if (!q)
                    throw ArithmeticError("Bareiss step is not exact");
                m(i, j) = std::move(*q);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    LaurentPoly det = m(n - 1, n - 1);
    return negate ? -det : det;
}

} // namespace onebridge
