#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace onebridge {

/// Integer Laurent polynomial sum_i c_i t^(low + i), kept canonical: the
/// first and last stored coefficients are nonzero, and zero has no terms.
/// All arithmetic is checked; overflow throws ArithmeticError.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t constant); // NOLINT: integers embed implicitly
    LaurentPoly(std::vector<std::int64_t> coeffs, std::int64_t low_degree);

    static LaurentPoly monomial(std::int64_t coeff, std::int64_t degree);
    static LaurentPoly t() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t low_degree() const { return low_; }
    std::int64_t high_degree() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    /// high_degree - low_degree; -1 for zero.
    std::int64_t span() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t coeff(std::int64_t degree) const;
    std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    /// Value at t = 1.
    std::int64_t at_one() const;
    /// p(1/t).
    LaurentPoly reciprocal() const;
    /// t^j * p.
    LaurentPoly shifted(std::int64_t j) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

    bool operator==(const LaurentPoly&) const = default;

private:
    void canonicalize();

    std::vector<std::int64_t> coeffs_;
    std::int64_t low_ = 0;
};

/// t^e.
LaurentPoly t_power(std::int64_t e);

/// q with a == q * b exactly, or nullopt when b does not divide a in Z[t, 1/t].
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Shift so the lowest degree is 0 and make the leading coefficient positive.
LaurentPoly normalize(const LaurentPoly& p);
/// p == +-t^j q for some j.
bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q);

/// "t^2 - t + 1" style text.
std::string to_string(const LaurentPoly& p);

/// Dense square matrix over Z[t, 1/t].
class LaurentMatrix {
public:
    explicit LaurentMatrix(std::size_t n = 0);
    static LaurentMatrix identity(std::size_t n);

    std::size_t rows() const { return n_; }
    std::size_t cols() const { return n_; }
    LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix operator-(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<LaurentPoly> data_;
};

/// Fraction-free (Bareiss) elimination; every division is exact.
LaurentPoly determinant(const LaurentMatrix& m);

} // namespace onebridge
