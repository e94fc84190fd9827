#pragma once

// Arbitrary-precision integers and rationals.
//
// Both are GMP types. mpq_class results of arithmetic are always canonical
// (lowest terms, positive denominator); make_rational() is the only place a
// rational is assembled from raw parts.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace quadzeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws DomainError if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Floor of a/b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);

Integer floor(const Rational& x);

/// {x}: the representative of x mod 1 in [0, 1).
Rational frac(const Rational& x);

/// <x>: the representative of x mod 1 in (0, 1].
Rational frac_angle(const Rational& x);

struct FracParts {
  Rational brace;  // {x} in [0, 1)
  Rational angle;  // <x> in (0, 1]
};

FracParts frac_parts(const Rational& x);

bool is_integer(const Rational& x);

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// 2^e as an integer.
Integer pow2(unsigned e);

/// Integer power; e >= 0.
Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, long e);

/// Canonical "p/q" or "p".
std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" with optional sign. Throws ParseError.
Rational parse_rational(const std::string& text);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace quadzeta
