// Exact arithmetic layer: arbitrary-precision integers/rationals (GMP),
// cached binomial coefficients, and the weight 1/C(n-i, k-i).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lekr {

using BigInt = mpz_class;

// Always kept canonical by GMP: lowest terms, denominator >= 1.
using Rational = mpq_class;

// Builds a canonical rational from a (possibly unreduced, possibly
// negative-denominator) fraction.
Rational make_rational(const BigInt& num, const BigInt& den);

// C(n, k). Returns 0 for k < 0 or k > n; requires n >= 0.
// Values are memoized; the cache takes concurrent readers and
// synchronizes internally on miss.
BigInt binomial(long n, long k);

// 1 / C(n-i, k-i), the per-member summand of the localized sum.
// Requires 0 <= i <= k <= n.
Rational weight(long n, long k, long i);

// "p/q" (or just "p" when q == 1).
std::string rational_to_string(const Rational& r);

// Decimal rendering with a fixed number of significant digits,
// round half to even. Fixed-point for exponents in [-4, sig),
// scientific otherwise. Used everywhere a report shows a decimal,
// so the output is byte-identical across platforms.
std::string decimal_string(const Rational& r, int significant_digits = 12);

// "p/q (decimal)" — the standard report form.
std::string rational_report(const Rational& r);

}  // namespace lekr
