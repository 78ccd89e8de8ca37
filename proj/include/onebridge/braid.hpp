#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace onebridge {

struct BraidLetter {
    int index = 1; // generator sigma_index, 1 <= index <= strands - 1
    int sign = 1;
    bool operator==(const BraidLetter&) const = default;
};

/// A word in the Artin generators of the braid group on `strands` strands.
/// Words are read as products: the rightmost letter acts first.
class BraidWord {
public:
    explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

    int strands() const { return strands_; }
    std::span<const BraidLetter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const BraidWord&) const = default;

private:
    int strands_;
    std::vector<BraidLetter> letters_;
};

/// left * right; `right` acts first.
BraidWord compose(const BraidWord& left, const BraidWord& right);

std::int64_t exponent_sum(const BraidWord& w);
bool is_positive(const BraidWord& w);

/// Bijection of {1, ..., n}, stored as the image array.
class Permutation {
public:
    static Permutation identity(int n);
    /// Cycle (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0, other points fixed.
    static Permutation from_cycle(int n, std::span<const int> cycle);
    explicit Permutation(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const { return images_; }

    /// Disjoint cycles, each starting at its smallest point, fixed points included.
    std::vector<std::vector<int>> cycles() const;
    bool is_single_cycle() const;
    std::string cycle_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// (p * q)(i) = p(q(i)).
Permutation operator*(const Permutation& p, const Permutation& q);

/// Image under sigma_i -> (i i+1); letter signs are ignored.
Permutation induced_permutation(const BraidWord& w);

/// The closure is a knot iff the induced permutation is one n-cycle.
bool is_knot(const BraidWord& w);

/// Parameters of the braid (s1 ... s_b)(s1 ... s_{w-1})^{t + m w}.
/// b may reach w - 1 so that the trefoil B(3, 1, 2) is representable.
struct OneBridgeParams {
    int w = 3;
    int t = 1;
    int b = 1;
    int m = 0;

    void validate() const;
    /// t + m w, the number of full passes.
    std::int64_t twist() const { return static_cast<std::int64_t>(t) + static_cast<std::int64_t>(m) * w; }
    bool operator==(const OneBridgeParams&) const = default;
};

/// 1 <= k <= floor((w - 1) / 2); the sweeps stop at floor((w - 2) / 2).
struct Family1 {
    int w = 3;
    int k = 1;
    int m = 0;
    bool operator==(const Family1&) const = default;
};
struct Family2 {
    int n = 2;
    int k = 1;
    int m = 0;
    bool operator==(const Family2&) const = default;
};
struct Family3 {
    int n = 2;
    int k = 1;
    int m = 0;
    bool operator==(const Family3&) const = default;
};

/// The three knot families: (w, 1, 2k), (2n+1, 2n-1, 2k) and (2n, 2n-2, 2k-1).
using FamilyParams = std::variant<Family1, Family2, Family3>;

void validate(const FamilyParams& f);
int family_index(const FamilyParams& f);
int family_m(const FamilyParams& f);
OneBridgeParams to_one_bridge(const FamilyParams& f);
std::string describe(const FamilyParams& f);

BraidWord one_bridge_word(const OneBridgeParams& p);

/// Endpoint permutation of the family braid, written down in closed form
/// (no composition of transpositions).
Permutation closed_form_permutation(const FamilyParams& f);

/// (w - 1)(t + m w) + b.
std::int64_t claimed_surface_framing(const OneBridgeParams& p);

/// Every valid parameter set with the given bounds, in a fixed order.
std::vector<FamilyParams> family1_sweep(int max_w, int max_m);
std::vector<FamilyParams> family2_sweep(int max_n, int max_m);
std::vector<FamilyParams> family3_sweep(int max_n, int max_m);

std::string to_string(const BraidWord& w);

} // namespace onebridge
