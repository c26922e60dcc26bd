#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace fraxform {

using Rational = mpq_class;

/// Order of the local fractional calculus, alpha in (0, 1].
void require_valid_order(const Rational& alpha);

/// "3", "-7/2". Canonical form, no spaces.
std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Exact literal: integer, decimal ("0.25") or fraction ("7/2"), optional
/// leading sign. Returns nullopt on malformed text or zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Exact rational square root when one exists.
std::optional<Rational> exact_sqrt(const Rational& q);

/// base^exponent for base > 0 when the result is rational.
std::optional<Rational> exact_power(const Rational& base, const Rational& exponent);

Rational rational_pow(const Rational& base, unsigned long exponent);

}  // namespace fraxform
