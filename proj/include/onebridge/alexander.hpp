#pragma once

#include "onebridge/braid.hpp"
#include "onebridge/homology.hpp"
#include "onebridge/laurent.hpp"

namespace onebridge {

/// phi(dw/dx) for the Fox derivative along generator `gen`, where phi sends
/// a -> t and b -> t^beta_power.
LaurentPoly fox_derivative(const GroupWord& w, int gen, std::int64_t beta_power);

/// Alexander polynomial of <a, b | r>, normalized. Both Fox derivatives are
/// computed and checked against each other; a mismatch throws ArithmeticError.
LaurentPoly fox_alexander(const KnotGroupPresentation& pres, const AbelianizationReport& report);

/// Reduced Burau image of a single generator (sign -1 gives the inverse).
LaurentMatrix burau_generator(int strands, const BraidLetter& letter);
LaurentMatrix burau_matrix(const BraidWord& w);

/// det(I - rho(w)) / (1 + t + ... + t^(n-1)), normalized. The closure must be a knot.
LaurentPoly burau_alexander(const BraidWord& w);

} // namespace onebridge
