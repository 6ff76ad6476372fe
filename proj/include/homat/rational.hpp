#pragma once

#include <gmpxx.h>

#include <string>

namespace homat {

// All arithmetic in this library is exact. Rationals are kept in lowest
// terms with positive denominator (mpq_class maintains the canonical form
// through arithmetic; parsing canonicalizes explicitly).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or an integer string. Throws input_error on malformed text
// or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& q);

// base^exp for integer exp; negative exp requires base != 0.
Rational rational_pow(const Rational& base, long exp);

Integer integer_pow(long base, unsigned long exp);

}  // namespace homat
