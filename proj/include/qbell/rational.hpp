#pragma once

#include <gmpxx.h>

#include <string>

namespace qbell {

// Exact arbitrary-precision scalars, backed by GMP. mpq_class keeps the
// canonical form the rest of the library relies on (den > 0, gcd(num,den)=1)
// as long as values are built through make_rational/parse_rational or
// arithmetic on already-canonical operands.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced and sign-normalized; throws std::invalid_argument on den = 0.
Rational make_rational(const Integer& num, const Integer& den);

// n!, grown on demand in a per-thread table.
const Integer& factorial(unsigned long n);

Integer binomial(unsigned long n, unsigned long k);

Integer int_pow(const Integer& base, unsigned long exp);
Rational rat_pow(const Rational& base, unsigned long exp);

Rational rat_abs(const Rational& x);
bool is_integral(const Rational& x);

Integer rat_floor(const Rational& x);
Integer rat_ceil(const Rational& x);

// Accepts "n" or "n/d" in base 10 (optional leading '-').
Rational parse_rational(const std::string& text);

// Always "num/den", even when den = 1.
std::string fraction_string(const Rational& x);

// GMP default: bare integer when den = 1, "num/den" otherwise.
std::string plain_string(const Rational& x);

}  // namespace qbell
