#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace erdos {

// All geometry in this library is exact. Rational is GMP's canonical mpq:
// denominator > 0, gcd(|num|, den) = 1, arbitrary precision.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den);
Rational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p", "p/q", optional leading '-' or '+', arbitrary precision.
// Throws Error(ParseError) on anything else; result is canonical.
Rational parse_rational(std::string_view text);

// Canonical form: "p/q", or "p" when q = 1. Sign on the numerator.
std::string rat_str(const Rational& value);

BigInt rat_floor(const Rational& value);
BigInt rat_ceil(const Rational& value);

Rational rat_abs(const Rational& value);
const Rational& rat_min(const Rational& a, const Rational& b);
const Rational& rat_max(const Rational& a, const Rational& b);

// Exact integer power; exponent >= 0.
Rational rat_pow(const Rational& base, unsigned long exponent);

// 2^exponent for any (possibly negative) exponent.
Rational rat_pow2(long exponent);

double rat_double(const Rational& value);

// Largest power of two 2^t with 2^t < bound (bound > 0).
Rational largest_pow2_below(const Rational& bound);

}  // namespace erdos
