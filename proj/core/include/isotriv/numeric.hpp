#pragma once

// Exact integer and rational scalars shared by every module.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace isotriv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (surrounding whitespace allowed).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a base-10 integer, throwing std::invalid_argument on failure.
Integer parse_integer(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Largest integer not exceeding value.
Integer floor(const Rational& value);

/// Representative of value modulo 1 in [0, 1).
Rational frac(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b);

/// Narrowing conversion that throws std::overflow_error when out of range.
long to_long(const Integer& value);

}  // namespace isotriv
