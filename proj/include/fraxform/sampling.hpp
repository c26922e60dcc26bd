#pragma once

#include <cstdint>
#include <random>

#include "fraxform/atoms.hpp"

namespace fraxform {

/// Random rational p/q with p in [lo, hi] and q in [1, max_den].
Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den);

/// Random canonical TimeExpr with 1..max_atoms atoms, small rational rates
/// in (0, 12] and coefficients in [-20, 20]. May be zero after merging.
TimeExpr random_expr(std::mt19937_64& rng, const Rational& alpha, int max_atoms = 4);

/// Integers a >= 2 with a^alpha rational: perfect powers of the denominator of alpha.
Rational random_scalable_factor(std::mt19937_64& rng, const Rational& alpha);

}  // namespace fraxform
